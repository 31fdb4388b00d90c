#pragma once

#include <optional>
#include <string>

#include "x33/certificate.hpp"
#include "x33/construct.hpp"

namespace x33 {

struct RunOptions {
    // one of: all, cohomology, lemma1, lemma2, chern, stability, geometry
    std::string target = "all";
    std::optional<Rat> n;  // polarization for stability; `all` defaults to 2 and 3
    ConstructionData data = ConstructionData::standard();
};

struct RunResult {
    int exit_code = 0;  // 0 all PASS (FLAGGED allowed), 1 some FAIL
    Certificate cert;
};

// Runs the requested verification target and assembles the certificate.
// Throws std::invalid_argument on usage errors (unknown target, N <= 1).
RunResult run_verification(const RunOptions& opts);

}  // namespace x33
