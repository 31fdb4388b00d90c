#include "x33/biform.hpp"

#include <cstring>
#include <sstream>
#include <stdexcept>

namespace x33 {

namespace {
constexpr const char* kVarNames = "xyzuvw";
}

std::string Monomial6::str() const {
    std::string out;
    for (int v = 0; v < 6; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += " ";
        out += kVarNames[v];
        if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out.empty() ? "1" : out;
}

BiForm::BiForm(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative bidegree");
}

BiForm BiForm::monomial(const Monomial6& m, Rat c) {
    BiForm f(m.deg1(), m.deg2());
    if (c != 0) f.terms_[m] = std::move(c);
    return f;
}

void BiForm::add_term(const Monomial6& m, const Rat& c) {
    for (int v = 0; v < 6; ++v)
        if (m.e[v] < 0) throw std::invalid_argument("negative exponent");
    if (m.deg1() != d1_ || m.deg2() != d2_)
        throw std::invalid_argument("term violates declared bidegree");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat BiForm::coeff(const Monomial6& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

BiForm BiForm::operator-() const {
    BiForm f(*this);
    for (auto& [m, c] : f.terms_) c = -c;
    return f;
}

BiForm operator+(const BiForm& a, const BiForm& b) {
    if (a.d1_ != b.d1_ || a.d2_ != b.d2_)
        throw std::invalid_argument("bidegree mismatch in sum");
    BiForm f(a);
    for (const auto& [m, c] : b.terms_) f.add_term(m, c);
    return f;
}

BiForm operator-(const BiForm& a, const BiForm& b) { return a + (-b); }

BiForm operator*(const BiForm& a, const BiForm& b) {
    BiForm f(a.d1_ + b.d1_, a.d2_ + b.d2_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial6 m;
            for (int v = 0; v < 6; ++v) m.e[v] = ma.e[v] + mb.e[v];
            f.add_term(m, ca * cb);
        }
    }
    return f;
}

BiForm operator*(const Rat& s, const BiForm& a) {
    BiForm f(a.d1_, a.d2_);
    if (s == 0) return f;
    for (const auto& [m, c] : a.terms_) f.terms_[m] = s * c;
    return f;
}

bool BiForm::operator==(const BiForm& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return d1_ == o.d1_ && d2_ == o.d2_ && terms_ == o.terms_;
}

BiForm BiForm::partial(Var v) const {
    int nd1 = d1_ - (v < 3 ? 1 : 0);
    int nd2 = d2_ - (v < 3 ? 0 : 1);
    BiForm f(std::max(nd1, 0), std::max(nd2, 0));
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) continue;
        Monomial6 dm = m;
        dm.e[v] -= 1;
        f.add_term(dm, c * m.e[v]);
    }
    return f;
}

BinForm BiForm::restrict_to_line() const {
    std::vector<Rat> c(d1_ + 1, Rat(0));
    for (const auto& [m, co] : terms_) {
        if (m.e[VX] != 0 || m.e[VU] != 0 || m.e[VV] != 0) continue;
        c[m.e[VZ]] += co;
    }
    return BinForm::from_coeffs(d1_, std::move(c));
}

TernForm BiForm::restrict_to_fibre() const {
    TernForm f(d1_);
    for (const auto& [m, co] : terms_) {
        if (m.e[VU] != 0 || m.e[VV] != 0) continue;
        f.add_x_coeff(m.e[VX], BinForm::monomial(m.e[VY], m.e[VZ], co));
    }
    return f;
}

BiForm BiForm::substitute_zero(Var v) const {
    BiForm f(d1_, d2_);
    for (const auto& [m, c] : terms_)
        if (m.e[v] == 0) f.add_term(m, c);
    return f;
}

bool BiForm::every_term_divisible(const Monomial6& d) const {
    for (const auto& [m, c] : terms_)
        for (int v = 0; v < 6; ++v)
            if (m.e[v] < d.e[v]) return false;
    return true;
}

BiForm BiForm::exact_div_var(Var v) const {
    int nd1 = d1_ - (v < 3 ? 1 : 0);
    int nd2 = d2_ - (v < 3 ? 0 : 1);
    BiForm f(std::max(nd1, 0), std::max(nd2, 0));
    for (const auto& [m, c] : terms_) {
        if (m.e[v] == 0) throw std::invalid_argument("form not divisible by variable");
        Monomial6 dm = m;
        dm.e[v] -= 1;
        f.add_term(dm, c);
    }
    return f;
}

BiForm BiForm::parse(std::string_view text) {
    std::map<Monomial6, Rat> collected;
    int d1 = -1, d2 = -1;
    std::istringstream lines{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream in(line);
        std::string tok;
        if (!(in >> tok)) continue;  // blank
        Rat c = rat_parse(tok);
        Monomial6 m;
        while (in >> tok) {
            size_t caret = tok.find('^');
            std::string var = tok.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos) {
                try {
                    exp = std::stoi(tok.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad exponent on line " + std::to_string(lineno));
                }
            }
            if (var.size() != 1 || exp < 0)
                throw std::invalid_argument("bad factor '" + tok + "' on line " +
                                            std::to_string(lineno));
            const char* pos = std::strchr(kVarNames, var[0]);
            if (!pos || var[0] == '\0')
                throw std::invalid_argument("unknown variable '" + var + "' on line " +
                                            std::to_string(lineno));
            m.e[pos - kVarNames] += exp;
        }
        if (d1 < 0) {
            d1 = m.deg1();
            d2 = m.deg2();
        } else if (m.deg1() != d1 || m.deg2() != d2) {
            throw std::invalid_argument("bidegree mismatch on line " + std::to_string(lineno));
        }
        auto it = collected.find(m);
        if (it == collected.end())
            collected[m] = c;
        else
            it->second += c;
    }
    if (d1 < 0) return BiForm(0, 0);  // no terms: the zero form
    BiForm f(d1, d2);
    for (const auto& [m, c] : collected)
        if (c != 0) f.terms_[m] = c;
    return f;
}

std::string BiForm::str() const {
    if (terms_.empty()) return "0\n";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out += rat_str(it->second);
        const Monomial6& m = it->first;
        for (int v = 0; v < 6; ++v) {
            if (m.e[v] == 0) continue;
            out += " ";
            out += kVarNames[v];
            if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace x33
