#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "x33/pipeline.hpp"

namespace {

int run(const std::string& target, const std::string& n_str, const std::string& p_file,
        const std::string& format, const std::string& out_path) {
    x33::RunOptions opts;
    opts.target = target;
    if (!n_str.empty()) opts.n = x33::rat_parse(n_str);
    if (!p_file.empty()) {
        std::ifstream in(p_file);
        if (!in) {
            std::cerr << "error: cannot open perturbation file " << p_file << "\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        x33::BiForm p = x33::BiForm::parse(text.str());
        opts.data = p.is_zero() ? x33::ConstructionData::standard()
                                : x33::ConstructionData::with_perturbation(p);
    }

    x33::RunResult res = x33::run_verification(opts);
    std::string payload = format == "json" ? res.cert.emit_json() : res.cert.emit_text();
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << payload;
    }
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"x33cert — exact verification of a rank-2 bundle construction on the (3,3) "
                 "Calabi-Yau hypersurface in P^2 x P^2"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run verification checks and emit a certificate");
    std::string target;
    std::string n_str;
    std::string p_file;
    std::string format = "text";
    std::string out_path;
    verify->add_option("target", target, "all|cohomology|lemma1|lemma2|chern|stability|geometry")
        ->required();
    verify->add_option("--N", n_str, "polarization N (rational, N > 1) for stability");
    verify->add_option("--p-file", p_file, "perturbation p in polynomial text format");
    verify->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the certificate to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        return run(target, n_str, p_file, format, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
