#pragma once

#include <array>
#include <string>
#include <utility>

#include "x33/ratpoly.hpp"
#include "x33/rational.hpp"

namespace x33 {

// Cohomology class a w1 + b w2 in H^2(X); w1, w2 are the pulled-back
// hyperplane classes of the two plane factors.
struct H2Class {
    Rat a, b;
    bool operator==(const H2Class& o) const { return a == o.a && b == o.b; }
    std::string str() const;
};

// Class p w1^2 + q w2^2 in H^4(X); the basis is already reduced via
// w1 w2 = w1^2 + w2^2. The integral lattice is generated by w1^2/3, w2^2/3.
struct H4Class {
    Rat p, q;
    bool operator==(const H4Class& o) const { return p == o.p && q == o.q; }
    H4Class operator+(const H4Class& o) const { return {p + o.p, q + o.q}; }
    std::string str() const;
};

// Kahler class N w1 + w2; stability claims need N > 1, enforced at verdict
// time rather than on construction.
struct Polarization {
    Rat n;
};

// (a w1 + b w2)^2 reduced to the (w1^2, w2^2) basis.
H4Class h2_square(const H2Class& c);
// Bilinear companion of h2_square.
H4Class h2_mul(const H2Class& c, const H2Class& d);

// Degree-3 integrals over X of w1^3, w1^2 w2, w1 w2^2, w2^3, derived at
// startup from the ambient ring Q[w1,w2]/(w1^3, w2^3) by pairing against the
// hypersurface class 3 w1 + 3 w2 (with w1^2 w2^2 integrating to 1 on P).
const std::array<Rat, 4>& primitive_integrals();

// Trilinear integration of an H^4 class against an H^2 class over X.
Rat integrate_x(const H4Class& c4, const H2Class& c2);

// deg = c1 . (N w1 + w2)^2, numerically and as an exact polynomial in N.
Rat degree(const H2Class& c1, const Polarization& pol);
RatPoly degree_symbolic(const H2Class& c1);
Rat slope(const H2Class& c1, int rank, const Polarization& pol);

// Rank-2 twist: c1' = c1 + 2(k,l), c2' = c2 + c1.(k,l) + (k,l)^2.
std::pair<H2Class, H4Class> twist_chern(const H2Class& c1, const H4Class& c2, int k, int l);

// Divisibility of an H^4 class in the integral lattice.
struct Divisibility {
    enum class Kind { Indivisible, DivisibleBy, NonIntegral } kind;
    Int divisor;     // meaningful for DivisibleBy
    Int m, n;        // integral coordinates (3p, 3q) when integral
    std::string str() const;
};
Divisibility indivisibility(const H4Class& c);

}  // namespace x33
