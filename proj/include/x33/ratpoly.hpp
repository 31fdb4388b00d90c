#pragma once

#include <string>
#include <utility>
#include <vector>

#include "x33/rational.hpp"

namespace x33 {

class RatPoly;

// All rational roots with multiplicity, plus the root-free residual factor.
struct PolyRoots;

// Dense univariate polynomial over Q. Trailing zero coefficients are trimmed,
// so degree() is the true degree (-1 for the zero polynomial).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(Rat constant);
    static RatPoly from_coeffs(std::vector<Rat> c);  // c[i] on t^i
    static RatPoly monomial(int degree, Rat c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& a);
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& t) const;

    // Euclidean division a = q*b + r, deg r < deg b. Throws on b = 0.
    static void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    static RatPoly gcd(RatPoly a, RatPoly b);  // monic; gcd(0,0) = 0
    RatPoly monic() const;

    PolyRoots rational_roots() const;

    std::string str(const std::string& var) const;

private:
    void trim();
    std::vector<Rat> c_;
};

struct PolyRoots {
    std::vector<std::pair<Rat, int>> roots;
    RatPoly residual;  // no rational roots; == constant iff the poly splits over Q
};

}  // namespace x33
