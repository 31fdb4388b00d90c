#include "x33/p1split.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "x33/ratmat.hpp"

namespace x33 {

BundleMapP1::BundleMapP1(std::vector<int> sources, int target, std::vector<BinForm> fs)
    : source_degs(std::move(sources)), target_deg(target), entries(std::move(fs)) {
    if (source_degs.empty()) throw std::invalid_argument("empty source");
    if (entries.size() != source_degs.size())
        throw std::invalid_argument("entry count does not match source rank");
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].is_zero()) continue;
        if (entries[i].degree() != target_deg - source_degs[i])
            throw std::invalid_argument("entry degree must be d - a_i");
    }
}

bool BundleMapP1::is_zero_map() const {
    for (const auto& f : entries)
        if (!f.is_zero()) return false;
    return true;
}

long kernel_hilbert(const BundleMapP1& map, int t) {
    const int d = map.target_deg;
    const int n = static_cast<int>(map.source_degs.size());
    // Column blocks: monomial basis y^(a_i+t-j) z^j of each g_i.
    std::vector<std::pair<int, int>> cols;  // (entry index, z-power j)
    for (int i = 0; i < n; ++i) {
        int gi = map.source_degs[i] + t;
        for (int j = 0; j <= gi; ++j) cols.emplace_back(i, j);
    }
    if (cols.empty()) return 0;
    int rows = std::max(d + t + 1, 0);
    RatMat m(rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        auto [i, j] = cols[c];
        const BinForm& f = map.entries[i];
        if (f.is_zero()) continue;
        for (int k = 0; k <= f.degree(); ++k) {
            if (f.coeff(k) == 0) continue;
            m.at(k + j, static_cast<int>(c)) += f.coeff(k);
        }
    }
    return m.nullity();
}

SplittingType::SplittingType(std::vector<int> degs) : degs_(std::move(degs)) {
    std::sort(degs_.begin(), degs_.end(), std::greater<int>());
}

long SplittingType::h0() const { return hilbert(0); }

long SplittingType::h1() const {
    long s = 0;
    for (int b : degs_) s += std::max(0, -b - 1);
    return s;
}

long SplittingType::hilbert(int t) const {
    long s = 0;
    for (int b : degs_) s += std::max(0, b + t + 1);
    return s;
}

std::string SplittingType::str() const {
    std::string out = "{";
    for (size_t i = 0; i < degs_.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(degs_[i]);
    }
    return out + "}";
}

long h0_of_splitting(const SplittingType& s) { return s.h0(); }

SplittingType splitting_type(const BundleMapP1& map) {
    // Zero entries split off as direct summands O(a_i); the rest is the kernel
    // of the nonzero submap, whose rank is (#nonzero - 1).
    std::vector<int> degs;
    std::vector<int> nz_sources;
    std::vector<BinForm> nz_entries;
    for (size_t i = 0; i < map.entries.size(); ++i) {
        if (map.entries[i].is_zero())
            degs.push_back(map.source_degs[i]);
        else {
            nz_sources.push_back(map.source_degs[i]);
            nz_entries.push_back(map.entries[i]);
        }
    }

    if (nz_sources.size() >= 2) {
        BundleMapP1 sub(nz_sources, map.target_deg, nz_entries);
        const int r = static_cast<int>(nz_sources.size()) - 1;
        const int e = binform_gcd(nz_entries).degree();
        int max_a = *std::max_element(nz_sources.begin(), nz_sources.end());
        long sum_b = 0;
        for (int a : nz_sources) sum_b += a;
        sum_b += e - map.target_deg;  // degree of the kernel bundle
        // Every summand satisfies b <= max_a and b >= sum_b - (r-1) max_a, so
        // all thresholds t = -b fall inside this window.
        long b_lo = sum_b - static_cast<long>(r - 1) * max_a;
        int t_lo = -max_a - 1;
        int t_hi = static_cast<int>(-b_lo) + 2;
        if (t_hi < t_lo) t_hi = t_lo;

        std::vector<long> h;
        for (int t = t_lo; t <= t_hi; ++t) h.push_back(kernel_hilbert(sub, t));

        // Greedy peel: the largest remaining summand is minus the first degree
        // where the residual Hilbert function becomes positive.
        auto fail = [&](const char* why) {
            throw std::runtime_error(std::string("fit failure: ") + why);
        };
        for (int j = 0; j < r; ++j) {
            int first = -1;
            for (size_t idx = 0; idx < h.size(); ++idx) {
                if (h[idx] > 0) {
                    first = static_cast<int>(idx);
                    break;
                }
                if (h[idx] < 0) fail("negative residual Hilbert value");
            }
            if (first < 0) fail("fewer thresholds than the kernel rank");
            int b = -(t_lo + first);
            degs.push_back(b);
            for (size_t idx = 0; idx < h.size(); ++idx) {
                int t = t_lo + static_cast<int>(idx);
                h[idx] -= std::max(0, b + t + 1);
            }
        }
        for (long v : h)
            if (v != 0) fail("residual Hilbert values after peeling");
    }
    // A single nonzero entry has kernel zero and contributes nothing.

    SplittingType split(degs);
    for (int t : {2, 5}) {
        int probe = split.degs().empty() ? t : -split.degs().back() + t;
        if (kernel_hilbert(map, probe) != split.hilbert(probe))
            throw std::runtime_error("fit failure: verification at extra degree");
    }
    return split;
}

}  // namespace x33
