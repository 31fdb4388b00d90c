#include <doctest.h>

#include "test_util.hpp"
#include "x33/construct.hpp"
#include "x33/ternary.hpp"

using namespace x33;
using testutil::rand_biform;
using testutil::rand_binform;

namespace {

Monomial6 mono(int x, int y, int z, int u, int v, int w) {
    return Monomial6{{x, y, z, u, v, w}};
}

}  // namespace

TEST_CASE("biform arithmetic on monomials") {
    BiForm a = BiForm::monomial(mono(2, 1, 0, 0, 0, 3));  // x^2 y w^3
    BiForm b = BiForm::monomial(mono(0, 0, 3, 1, 0, 2));  // z^3 u w^2
    BiForm s = a + b;
    CHECK(s.terms().size() == 2);
    CHECK(s.bidegree() == std::make_pair(3, 3));

    BiForm one = BiForm::monomial(mono(0, 0, 0, 0, 0, 0));
    CHECK(a * one == a);

    BiForm xy = BiForm::monomial(mono(1, 0, 0, 0, 0, 0)) + BiForm::monomial(mono(0, 1, 0, 0, 0, 0));
    BiForm cube = xy * xy * xy;
    CHECK(cube.coeff(mono(3, 0, 0, 0, 0, 0)) == 1);
    CHECK(cube.coeff(mono(2, 1, 0, 0, 0, 0)) == 3);
    CHECK(cube.coeff(mono(1, 2, 0, 0, 0, 0)) == 3);
    CHECK(cube.coeff(mono(0, 3, 0, 0, 0, 0)) == 1);

    BiForm wrong(2, 2);
    CHECK_THROWS_AS(a + wrong, std::invalid_argument);
}

TEST_CASE("zero forms compare equal across bidegrees") {
    CHECK(BiForm(3, 3) == BiForm(1, 0));
    CHECK(BinForm(3) == BinForm());
    CHECK_FALSE(BiForm::monomial(mono(1, 0, 0, 0, 0, 0)) == BiForm(1, 0));
}

TEST_CASE("partial derivatives of the threefold form") {
    BiForm f = canonical_threefold_form();

    TernForm du = f.partial(VU).restrict_to_fibre();
    CHECK(du == TernForm::monomial(0, 0, 3));  // z^3

    BinForm dv = f.partial(VV).restrict_to_line();
    CHECK(dv == BinForm::monomial(1, 2) + BinForm::monomial(3, 0));  // z^2 y + y^3

    BiForm constant = BiForm::monomial(mono(0, 0, 0, 0, 0, 0), rat(7));
    CHECK(constant.partial(VX).is_zero());
}

TEST_CASE("restriction to the line kills x, u, v and sets w = 1") {
    CHECK(canonical_threefold_form().restrict_to_line().is_zero());
    CHECK(BiForm::monomial(mono(2, 1, 0, 0, 0, 3)).restrict_to_line().is_zero());

    BiForm two_terms =
        BiForm::monomial(mono(0, 1, 2, 0, 1, 2)) + BiForm::monomial(mono(0, 0, 3, 1, 0, 2));
    CHECK(two_terms.restrict_to_line().is_zero());

    BiForm survives = BiForm::monomial(mono(0, 1, 2, 0, 0, 3));  // z^2 y w^3
    CHECK(survives.restrict_to_line() == BinForm::monomial(1, 2));
}

TEST_CASE("leibniz rule and restriction homomorphism on random forms") {
    std::mt19937_64 rng(20240811);
    for (int it = 0; it < 60; ++it) {
        BiForm f = rand_biform(rng, 2, 1);
        BiForm g = rand_biform(rng, 1, 2);
        for (Var v : {VX, VY, VZ, VU, VV, VW}) {
            BiForm lhs = (f * g).partial(v);
            BiForm rhs = f.partial(v) * g + f * g.partial(v);
            CHECK(lhs == rhs);
        }
        CHECK((f * g).restrict_to_line() == f.restrict_to_line() * g.restrict_to_line());
    }
}

TEST_CASE("binary form gcd") {
    BinForm z3 = BinForm::monomial(0, 3);
    BinForm yq = BinForm::monomial(3, 0) + BinForm::monomial(1, 2);  // y(y^2+z^2)
    CHECK(binform_gcd({z3, yq}).degree() == 0);

    // alpha beta and alpha^2 - beta^2 in the (alpha, beta) variables
    BinForm ab = BinForm::monomial(1, 1);
    BinForm diff = BinForm::monomial(2, 0) - BinForm::monomial(0, 2);
    CHECK(binform_gcd({ab, diff}).degree() == 0);

    CHECK(binform_gcd({BinForm::monomial(0, 2), BinForm::monomial(1, 1)}) ==
          BinForm::monomial(0, 1));

    CHECK_THROWS_AS(binform_gcd({BinForm(), BinForm(2)}), std::invalid_argument);
}

TEST_CASE("gcd divides inputs and leaves coprime quotients") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 50) {
        BinForm common = rand_binform(rng, 1, false);
        BinForm f = common * rand_binform(rng, 2, false);
        BinForm g = common * rand_binform(rng, 2, false);
        BinForm d = binform_gcd({f, g});
        CHECK(d.divides(f));
        CHECK(d.divides(g));
        BinForm qf = f.exact_div(d);
        BinForm qg = g.exact_div(d);
        if (!qf.is_zero() && !qg.is_zero()) CHECK(binform_gcd({qf, qg}).degree() == 0);
        ++done;
    }
}

TEST_CASE("dual numbers annihilate eps^2") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
        BinForm a = rand_binform(rng, 2), b = rand_binform(rng, 2);
        BinForm c = rand_binform(rng, 1), d = rand_binform(rng, 1);
        DualBinForm x{a, b}, y{c, d};
        DualBinForm prod = x * y;
        CHECK(prod.val == a * c);
        CHECK(prod.eps == a * d + b * c);
        DualBinForm eps_only{BinForm(), b};
        CHECK((eps_only * eps_only).val.is_zero());
        CHECK((eps_only * eps_only).eps.is_zero());
    }
}

TEST_CASE("common zeros in the plane") {
    // dF/du and dF/dv of the unperturbed form on the central fibre
    TernForm z3 = TernForm::monomial(0, 0, 3);
    TernForm g(3);
    g.add_x_coeff(0, BinForm::monomial(1, 2) + BinForm::monomial(3, 0));  // z^2 y + y^3
    g.add_x_coeff(1, BinForm::monomial(2, 0, Rat(3)));
    g.add_x_coeff(2, BinForm::monomial(1, 0, Rat(3)));
    g.add_x_coeff(3, BinForm::monomial(0, 0));  // (x+y)^3 + z^2 y
    auto res = common_zeros_p2(z3, g);
    REQUIRE(res.points.size() == 1);
    CHECK(res.points[0].str() == "[1:-1:0]");
    CHECK_FALSE(res.irrational_remainder);

    auto axes = common_zeros_p2(TernForm::monomial(1, 0, 0), TernForm::monomial(0, 1, 0));
    REQUIRE(axes.points.size() == 1);
    CHECK(axes.points[0].str() == "[0:0:1]");

    TernForm zz = TernForm::monomial(0, 0, 2);
    TernForm zy = TernForm::monomial(0, 1, 1);
    CHECK_THROWS_AS(common_zeros_p2(zz, zy), common_factor_error);
    try {
        common_zeros_p2(zz, zy);
    } catch (const common_factor_error& e) {
        CHECK(e.factor == TernForm::monomial(0, 0, 1));
    }
}

TEST_CASE("doubling an entry keeps the same zero locus") {
    TernForm f = Rat(2) * TernForm::monomial(0, 0, 3);
    TernForm g(3);
    g.add_x_coeff(0, BinForm::monomial(1, 2) + BinForm::monomial(3, 0));
    g.add_x_coeff(1, BinForm::monomial(2, 0, Rat(3)));
    g.add_x_coeff(2, BinForm::monomial(1, 0, Rat(3)));
    g.add_x_coeff(3, BinForm::monomial(0, 0));
    auto res = common_zeros_p2(f, g);
    REQUIRE(res.points.size() == 1);
    CHECK(res.points[0].str() == "[1:-1:0]");
}

TEST_CASE("polynomial text format round trip") {
    BiForm f = canonical_threefold_form();
    BiForm g = BiForm::parse(f.str());
    CHECK(f == g);

    BiForm p = BiForm::parse("# comment line\n1/20 z^3 u w^2\n\n-1/25 y^3 v w^2\n");
    CHECK(p.bidegree() == std::make_pair(3, 3));
    CHECK(p.coeff(mono(0, 0, 3, 1, 0, 2)) == rat(1, 20));
    CHECK(p.coeff(mono(0, 3, 0, 0, 1, 2)) == rat(-1, 25));

    CHECK_THROWS_AS(BiForm::parse("1 x\n1 y^2\n"), std::invalid_argument);
    CHECK_THROWS_AS(BiForm::parse("1 q^2\n"), std::invalid_argument);
}

TEST_CASE("irrational common zeros are flagged, not fabricated") {
    // x^2 - 2 y^2 and z meet at [±sqrt(2):1:0] only.
    TernForm f(2);
    f.add_x_coeff(2, BinForm::monomial(0, 0));
    f.add_x_coeff(0, BinForm::monomial(2, 0, Rat(-2)));
    TernForm g = TernForm::monomial(0, 0, 1);
    auto res = common_zeros_p2(f, g);
    CHECK(res.points.empty());
    CHECK(res.irrational_remainder);
}

TEST_CASE("scalar multiplication is exact") {
    BiForm f = canonical_threefold_form();
    BiForm g = rat(3, 7) * f;
    CHECK(g.coeff(Monomial6{{2, 1, 0, 0, 0, 3}}) == rat(3, 7));
    CHECK(rat(7, 3) * g == f);
    CHECK((Rat(0) * f).is_zero());
}

TEST_CASE("ternary gcd via pseudo-remainders") {
    std::mt19937_64 rng(4242);
    // (x+y)(x+z) vs (x+y)(x-z) share exactly (x+y)
    TernForm xy(1), xz(1), xmz(1);
    xy.add_x_coeff(1, BinForm::monomial(0, 0));
    xy.add_x_coeff(0, BinForm::monomial(1, 0));
    xz.add_x_coeff(1, BinForm::monomial(0, 0));
    xz.add_x_coeff(0, BinForm::monomial(0, 1));
    xmz.add_x_coeff(1, BinForm::monomial(0, 0));
    xmz.add_x_coeff(0, BinForm::monomial(0, 1, Rat(-1)));
    TernForm g = tern_gcd(xy * xz, xy * xmz);
    CHECK(g.degree() == 1);
    CHECK(g.x_degree() == 1);
    (void)rng;
}
