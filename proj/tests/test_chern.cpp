#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "x33/chern.hpp"

using namespace x33;
using testutil::rand_rat;

TEST_CASE("primitive integrals from the ambient oracle") {
    const auto& I = primitive_integrals();
    CHECK(I[0] == 0);  // w1^3
    CHECK(I[1] == 3);  // w1^2 w2
    CHECK(I[2] == 3);  // w1 w2^2
    CHECK(I[3] == 0);  // w2^3
}

TEST_CASE("squares in the reduced basis") {
    CHECK(h2_square({Rat(1), Rat(-1)}) == H4Class{Rat(-1), Rat(-1)});
    CHECK(h2_square({Rat(1), Rat(0)}) == H4Class{Rat(1), Rat(0)});
    CHECK(h2_square({Rat(2), Rat(1)}) == H4Class{Rat(8), Rat(5)});  // N = 2: (N^2+2N, 1+2N)
}

TEST_CASE("the reduction relation pushes forward consistently") {
    // w1 w2 and w1^2 + w2^2 pair equally against both generators.
    H4Class mixed = h2_mul({Rat(1), Rat(0)}, {Rat(0), Rat(1)});
    H4Class sum{Rat(1), Rat(1)};
    for (const H2Class& w : {H2Class{Rat(1), Rat(0)}, H2Class{Rat(0), Rat(1)}})
        CHECK(integrate_x(mixed, w) == integrate_x(sum, w));
}

TEST_CASE("integration against hyperplane classes") {
    CHECK(integrate_x({Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == 3);
    CHECK(integrate_x({Rat(1), Rat(0)}, {Rat(1), Rat(0)}) == 0);
    // full degree of c1(E) at N = 2
    CHECK(integrate_x(h2_square({Rat(2), Rat(1)}), {Rat(-2), Rat(2)}) == 18);
}

TEST_CASE("degrees numerically and symbolically") {
    RatPoly deg_e = degree_symbolic({Rat(-2), Rat(2)});
    CHECK(deg_e == RatPoly::from_coeffs({Rat(-6), Rat(0), Rat(6)}));
    CHECK(degree({Rat(-2), Rat(2)}, {Rat(2)}) == 18);

    CHECK(degree({Rat(2), Rat(0)}, {Rat(2)}) == 30);  // 6(2N+1) at N=2
    CHECK(degree({Rat(0), Rat(0)}, {Rat(2)}) == 0);

    CHECK(slope({Rat(-2), Rat(2)}, 2, {Rat(2)}) == 9);
}

TEST_CASE("degree is linear with N^2 coefficient 3b") {
    std::mt19937_64 rng(31415);
    for (int it = 0; it < 50; ++it) {
        H2Class c{rand_rat(rng), rand_rat(rng)};
        RatPoly d = degree_symbolic(c);
        CHECK(d.degree() <= 2);
        CHECK(d.coeff(2) == 3 * c.b);
        H2Class c2{rand_rat(rng), rand_rat(rng)};
        RatPoly lhs = degree_symbolic({c.a + c2.a, c.b + c2.b});
        CHECK(lhs == d + degree_symbolic(c2));
    }
}

TEST_CASE("integration is symmetric as a trilinear form") {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 50; ++it) {
        H2Class a{rand_rat(rng), rand_rat(rng)};
        H2Class b{rand_rat(rng), rand_rat(rng)};
        H2Class c{rand_rat(rng), rand_rat(rng)};
        Rat v1 = integrate_x(h2_mul(a, b), c);
        Rat v2 = integrate_x(h2_mul(b, c), a);
        Rat v3 = integrate_x(h2_mul(a, c), b);
        CHECK(v1 == v2);
        CHECK(v2 == v3);
    }
}

TEST_CASE("twist formulas") {
    H2Class c1{Rat(-2), Rat(2)};
    H4Class c2{Rat(0), rat(1, 3)};
    auto [c1a, c2a] = twist_chern(c1, c2, 1, -1);
    CHECK(c1a == H2Class{Rat(0), Rat(0)});
    CHECK(c2a == H4Class{Rat(1), rat(4, 3)});

    auto [c1b, c2b] = twist_chern(c1, c2, 0, 0);
    CHECK(c1b == c1);
    CHECK(c2b == c2);

    auto [c1c, c2c] = twist_chern(c1, c2, 1, 0);
    auto [c1d, c2d] = twist_chern(c1c, c2c, -1, 0);
    CHECK(c1d == c1);
    CHECK(c2d == c2);
}

TEST_CASE("twists compose additively") {
    std::mt19937_64 rng(161803);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int it = 0; it < 50; ++it) {
        H2Class c1{rand_rat(rng), rand_rat(rng)};
        H4Class c2{rand_rat(rng), rand_rat(rng)};
        int k1 = small(rng), l1 = small(rng), k2 = small(rng), l2 = small(rng);
        auto [u1, u2] = twist_chern(c1, c2, k1, l1);
        auto [v1, v2] = twist_chern(u1, u2, k2, l2);
        auto [w1, w2] = twist_chern(c1, c2, k1 + k2, l1 + l2);
        CHECK(v1 == w1);
        CHECK(v2 == w2);
    }
}

TEST_CASE("divisibility in the integral lattice") {
    Divisibility d = indivisibility({Rat(1), rat(4, 3)});
    CHECK(d.kind == Divisibility::Kind::Indivisible);
    CHECK(d.m == 3);
    CHECK(d.n == 4);

    d = indivisibility({Rat(2), Rat(0)});
    CHECK(d.kind == Divisibility::Kind::DivisibleBy);
    CHECK(d.divisor == 6);

    CHECK(indivisibility({rat(1, 2), Rat(0)}).kind == Divisibility::Kind::NonIntegral);
}

TEST_CASE("squares of integer classes are integral in the lattice") {
    std::mt19937_64 rng(5551);
    std::uniform_int_distribution<int> z(-9, 9);
    for (int it = 0; it < 80; ++it) {
        H2Class c{Rat(z(rng)), Rat(z(rng))};
        CHECK(indivisibility(h2_square(c)).kind != Divisibility::Kind::NonIntegral);
    }
}
