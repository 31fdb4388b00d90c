#pragma once

#include <string>
#include <vector>

#include "x33/binform.hpp"

namespace x33 {

// A map  (+)_i O(a_i) -> O(d)  of sheaves on the projective line, given by
// binary forms f_i of degree d - a_i (zero entries allowed).
struct BundleMapP1 {
    std::vector<int> source_degs;
    int target_deg = 0;
    std::vector<BinForm> entries;

    BundleMapP1(std::vector<int> sources, int target, std::vector<BinForm> fs);
    bool is_zero_map() const;
};

// dim over Q of { (g_1..g_n) : deg g_i = a_i + t, sum f_i g_i = 0 }, i.e. the
// Hilbert function of the kernel sheaf, by an exact null-space computation.
long kernel_hilbert(const BundleMapP1& map, int t);

// Multiset {b_j} for a split bundle (+)_j O(b_j), sorted descending.
class SplittingType {
public:
    SplittingType() = default;
    explicit SplittingType(std::vector<int> degs);

    const std::vector<int>& degs() const { return degs_; }
    size_t rank() const { return degs_.size(); }
    long h0() const;               // sum max(0, b+1)
    long h1() const;               // sum max(0, -b-1)
    long hilbert(int t) const;     // sum max(0, b+t+1)
    bool operator==(const SplittingType& o) const { return degs_ == o.degs_; }
    std::string str() const;       // "{1, -3}"

private:
    std::vector<int> degs_;
};

long h0_of_splitting(const SplittingType& s);

// Splitting type of the kernel bundle, inferred from the measured Hilbert
// function by greedy threshold peeling and re-verified against the map.
// Throws std::runtime_error("fit failure ...") if no split bundle matches.
SplittingType splitting_type(const BundleMapP1& map);

}  // namespace x33
