#include "x33/certificate.hpp"

#include <algorithm>

namespace x33 {

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Flagged: return "FLAGGED";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "";
}

CheckStatus Certificate::overall() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    return CheckStatus::Pass;
}

void Certificate::sort_by_id() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& l, const CheckRecord& r) { return l.id < r.id; });
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["input_digest"] = input_digest;
    j["overall"] = status_str(overall());
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json r;
        r["id"] = c.id;
        r["anchor"] = c.anchor;
        r["status"] = status_str(c.status);
        r["inputs"] = c.inputs;
        r["outputs"] = c.outputs;
        r["assertions"] = c.assertions;
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Certificate::emit_json() const { return to_json().dump(2) + "\n"; }

std::string Certificate::emit_text() const {
    std::string out;
    out += "toolkit " + version + "  input digest " + input_digest + "\n";
    for (const auto& c : checks) {
        out += "[" + status_str(c.status) + "] " + c.id + " — " + c.anchor + "\n";
        if (c.status == CheckStatus::Fail || c.status == CheckStatus::Flagged) {
            out += "    inputs:  " + c.inputs.dump() + "\n";
            out += "    outputs: " + c.outputs.dump() + "\n";
            for (const auto& a : c.assertions) out += "    note: " + a + "\n";
        }
    }
    out += "overall: " + status_str(overall()) + "\n";
    return out;
}

}  // namespace x33
