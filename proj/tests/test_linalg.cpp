#include <doctest.h>

#include <thread>

#include "x33/cohomology.hpp"
#include "x33/ratmat.hpp"
#include "x33/ratpoly.hpp"

using namespace x33;

TEST_CASE("exact rank, kernel and solve") {
    RatMat m(3, 4);
    // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0)
    const long rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    CHECK(m.rank() == 2);
    CHECK(m.nullity() == 2);
    auto kernel = m.kernel_basis();
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel)
        for (int i = 0; i < 3; ++i) {
            Rat acc(0);
            for (int j = 0; j < 4; ++j) acc += m.at(i, j) * v[j];
            CHECK(acc == 0);
        }

    auto sol = m.solve({Rat(10), Rat(20), Rat(2)});
    REQUIRE(sol.has_value());
    Rat acc(0);
    for (int j = 0; j < 4; ++j) acc += m.at(0, j) * (*sol)[j];
    CHECK(acc == 10);

    CHECK_FALSE(m.solve({Rat(1), Rat(0), Rat(0)}).has_value());  // violates row 2 = 2 row 1
}

TEST_CASE("polynomial division, gcd and roots") {
    RatPoly a = RatPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)});       // t^2 - 2
    RatPoly b = RatPoly::from_coeffs({Rat(1), Rat(1)});                // t + 1
    RatPoly q, r;
    RatPoly::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());

    RatPoly common = RatPoly::from_coeffs({rat(-1, 2), Rat(1)});
    RatPoly g = RatPoly::gcd(common * a, common * b);
    CHECK(g == common.monic());

    // (t - 1/2)^2 (t + 3) t: roots with multiplicity, nothing irrational
    RatPoly f = common * common * RatPoly::from_coeffs({Rat(3), Rat(1)}) *
                RatPoly::from_coeffs({Rat(0), Rat(1)});
    auto roots = f.rational_roots();
    REQUIRE(roots.roots.size() == 3);
    CHECK(roots.residual.degree() == 0);
    bool saw_half = false;
    for (const auto& [root, mult] : roots.roots)
        if (root == rat(1, 2)) {
            saw_half = true;
            CHECK(mult == 2);
        }
    CHECK(saw_half);

    auto irr = a.rational_roots();  // t^2 - 2
    CHECK(irr.roots.empty());
    CHECK(irr.residual.degree() == 2);
}

TEST_CASE("memoized tables are safe under concurrent reads and inserts") {
    std::vector<std::thread> workers;
    std::vector<long> sums(8, 0);
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([w, &sums] {
            long acc = 0;
            for (int a = -4; a <= 4; ++a)
                for (int b = -4; b <= 4; ++b) {
                    CohTable t = hypersurface_coh(a, b);
                    if (t.h[0]) acc += *t.h[0];
                    acc += h0_ic(a + 2, b + 2);
                }
            sums[w] = acc;
        });
    }
    for (auto& t : workers) t.join();
    for (int w = 1; w < 8; ++w) CHECK(sums[w] == sums[0]);
}
