#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace x33 {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Flagged, Skipped };
std::string status_str(CheckStatus s);

struct CheckRecord {
    std::string id;       // stable, sortable identifier
    std::string anchor;   // one of the claim strings in claims.hpp
    nlohmann::json inputs;
    nlohmann::json outputs;
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::string> assertions;
};

struct Certificate {
    std::string version = kToolkitVersion;
    std::string input_digest;
    std::vector<CheckRecord> checks;

    CheckStatus overall() const;  // PASS unless some record is FAIL
    void sort_by_id();

    nlohmann::json to_json() const;      // sorted keys, canonical rationals
    std::string emit_json() const;       // byte-stable across identical runs
    std::string emit_text() const;       // one line per check + detail blocks
};

}  // namespace x33
