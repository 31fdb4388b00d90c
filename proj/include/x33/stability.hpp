#pragma once

#include <string>
#include <utility>
#include <vector>

#include "x33/chern.hpp"
#include "x33/rational.hpp"

namespace x33 {

// A line bundle O(k,l) tested as a potential destabilizing subsheaf of E.
struct Candidate {
    int k = 0, l = 0;
    enum class Status { ExcludedByDegree, ExcludedNoSections, UnresolvedLifting } status;
    long section_upper_bound = 0;  // bound on dim Hom(O(k,l), E)
    Rat slope_gap;                 // mu(O(k,l)) - mu(E), exact
    std::string status_str() const;
};

struct StabilityReport {
    Rat n;  // polarization N
    std::vector<Candidate> candidates;  // sorted by (k,l)
    enum class Verdict { Stable, ConditionallyStable, Unstable } verdict;
    std::vector<std::pair<int, int>> unresolved;
    std::vector<std::string> notes;  // trusted external facts and flags
    std::string verdict_str() const;
};

// h^0(O_X(-k,-l)) + h^0(I_C(-k-2, -l+2)): an upper bound for h^0(E(-k,-l))
// from the section sequence of E, both summands recomputed honestly.
long section_upper_bound(int k, int l);

Rat slope_gap(int k, int l, const Rat& n);

// The finite search box of possibly-destabilizing candidates (one margin row
// beyond the exact box, so degree exclusions are visible), each classified
// exactly. Throws std::invalid_argument for N <= 1.
std::vector<Candidate> enumerate_candidates(const Rat& n);

// Symbolic proof that bundles with k <= 0, l <= 0 never destabilize for N > 1.
bool nonpositive_twists_excluded_symbolically(std::string* detail = nullptr);

StabilityReport verdict(const Rat& n);

}  // namespace x33
