#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "x33/p1split.hpp"

using namespace x33;
using testutil::rand_binform;

namespace {

// Random map with nonnegative-degree entries wherever possible.
BundleMapP1 rand_map(std::mt19937_64& rng, int max_rank = 4, int bound = 5) {
    std::uniform_int_distribution<int> rank_d(1, max_rank), deg_d(-bound, bound);
    int n = rank_d(rng);
    int d = deg_d(rng);
    std::vector<int> sources;
    std::vector<BinForm> entries;
    for (int i = 0; i < n; ++i) {
        int a = deg_d(rng);
        sources.push_back(a);
        int fdeg = d - a;
        bool force_zero = fdeg < 0 || (rng() & 3) == 0;
        entries.push_back(force_zero ? BinForm() : rand_binform(rng, fdeg));
    }
    return BundleMapP1(sources, d, entries);
}

}  // namespace

TEST_CASE("kernel hilbert values for the normal-bundle map") {
    BundleMapP1 map({1, 0, 0}, 3,
                    {BinForm(), BinForm::monomial(0, 3),
                     BinForm::monomial(3, 0) + BinForm::monomial(1, 2)});
    CHECK(kernel_hilbert(map, 0) == 2);

    BundleMapP1 koszul({0, 0}, 1, {BinForm::monomial(1, 0), BinForm::monomial(0, 1)});
    CHECK(kernel_hilbert(koszul, 2) == 2);

    BundleMapP1 zero({1, 0, 0}, 3, {BinForm(), BinForm(), BinForm()});
    CHECK(kernel_hilbert(zero, 0) == 4);
}

TEST_CASE("splitting types of the named maps") {
    BundleMapP1 map({1, 0, 0}, 3,
                    {BinForm(), BinForm::monomial(0, 3),
                     BinForm::monomial(3, 0) + BinForm::monomial(1, 2)});
    SplittingType s = splitting_type(map);
    CHECK(s == SplittingType({1, -3}));
    CHECK(s.h0() == 2);
    CHECK(h0_of_splitting(s) == 2);

    BundleMapP1 koszul({0, 0}, 1, {BinForm::monomial(1, 0), BinForm::monomial(0, 1)});
    CHECK(splitting_type(koszul) == SplittingType({-1}));

    BundleMapP1 shared({0, 0}, 2, {BinForm::monomial(0, 2), BinForm::monomial(1, 1)});
    CHECK(splitting_type(shared) == SplittingType({-1}));

    BundleMapP1 zero({1, 0, 0}, 3, {BinForm(), BinForm(), BinForm()});
    CHECK(splitting_type(zero) == SplittingType({1, 0, 0}));
}

TEST_CASE("h0 of splitting types") {
    CHECK(SplittingType({1, -3}).h0() == 2);
    CHECK(SplittingType({0, 0}).h0() == 2);
    CHECK(SplittingType({-1}).h0() == 0);
}

TEST_CASE("splitting reproduces measured hilbert data on random maps") {
    std::mt19937_64 rng(123456);
    int done = 0;
    while (done < 60) {
        BundleMapP1 map = rand_map(rng);
        SplittingType s = splitting_type(map);
        // 10 extra degrees, including far outside the inference window
        std::uniform_int_distribution<int> t_d(-12, 14);
        for (int probe = 0; probe < 10; ++probe) {
            int t = t_d(rng);
            CHECK(s.hilbert(t) == kernel_hilbert(map, t));
        }
        ++done;
    }
}

TEST_CASE("first chern class bookkeeping of the kernel") {
    std::mt19937_64 rng(987654);
    int done = 0;
    while (done < 50) {
        BundleMapP1 map = rand_map(rng);
        std::vector<BinForm> nonzero;
        std::vector<int> nz_sources;
        for (size_t i = 0; i < map.entries.size(); ++i)
            if (!map.entries[i].is_zero()) {
                nonzero.push_back(map.entries[i]);
                nz_sources.push_back(map.source_degs[i]);
            }
        if (nonzero.empty()) continue;
        int e = binform_gcd(nonzero).degree();
        SplittingType s = splitting_type(map);
        long sum_b = 0;
        for (int b : s.degs()) sum_b += b;
        long sum_a = 0;
        for (int a : map.source_degs) sum_a += a;
        if (nonzero.size() == 1) {
            // kernel = the zero entries only
            long zero_part = 0;
            for (size_t i = 0; i < map.entries.size(); ++i)
                if (map.entries[i].is_zero()) zero_part += map.source_degs[i];
            CHECK(sum_b == zero_part);
        } else {
            CHECK(sum_b == sum_a - map.target_deg + e);
        }
        ++done;
    }
}
