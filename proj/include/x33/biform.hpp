#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "x33/binform.hpp"
#include "x33/rational.hpp"
#include "x33/ternary.hpp"

namespace x33 {

// Variable order x, y, z (first factor); u, v, w (second factor).
enum Var : int { VX = 0, VY = 1, VZ = 2, VU = 3, VV = 4, VW = 5 };

struct Monomial6 {
    std::array<int, 6> e{};  // exponents of x,y,z,u,v,w

    int deg1() const { return e[VX] + e[VY] + e[VZ]; }
    int deg2() const { return e[VU] + e[VV] + e[VW]; }
    auto operator<=>(const Monomial6&) const = default;
    std::string str() const;
};

// Bihomogeneous polynomial in (x,y,z;u,v,w) over Q, sparse on monomials.
// A zero form keeps its declared bidegree for type checking but compares
// equal to every other zero form.
class BiForm {
public:
    BiForm() = default;
    BiForm(int d1, int d2);  // zero form of declared bidegree

    static BiForm monomial(const Monomial6& m, Rat c = Rat(1));
    void add_term(const Monomial6& m, const Rat& c);  // checks bihomogeneity

    std::pair<int, int> bidegree() const { return {d1_, d2_}; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial6, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial6& m) const;

    BiForm operator-() const;
    friend BiForm operator+(const BiForm& a, const BiForm& b);  // equal bidegree
    friend BiForm operator-(const BiForm& a, const BiForm& b);
    friend BiForm operator*(const BiForm& a, const BiForm& b);  // bidegrees add
    friend BiForm operator*(const Rat& s, const BiForm& a);
    bool operator==(const BiForm& o) const;

    // Formal partial derivative; result is bihomogeneous of bidegree
    // (d1-1, d2) or (d1, d2-1).
    BiForm partial(Var v) const;

    // Substitute x=0, u=0, v=0, w=1: binary form of degree d1 in (y, z).
    BinForm restrict_to_line() const;
    // Substitute u=0, v=0, w=1: ternary form of degree d1 in (x, y, z).
    TernForm restrict_to_fibre() const;
    // Substitute a single variable by zero (bidegree is kept).
    BiForm substitute_zero(Var v) const;
    // True when every term is divisible by x^i y^j ... per the exponent mask.
    bool every_term_divisible(const Monomial6& m) const;
    // Exact division by a single variable; throws when not divisible.
    BiForm exact_div_var(Var v) const;

    // One term per line: "<num>[/den] x^i y^j z^k u^p v^q w^r"; '#' comments.
    // The bidegree is inferred from the first term and checked on the rest.
    static BiForm parse(std::string_view text);
    // Canonical printing, one term per line, descending lexicographic order.
    std::string str() const;

private:
    int d1_ = 0, d2_ = 0;
    std::map<Monomial6, Rat> terms_;
};

}  // namespace x33
