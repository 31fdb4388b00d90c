#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "x33/binform.hpp"

namespace x33 {

// Homogeneous form in (x, y, z), stored by x-power: x_coeff(k) is a binary
// form in (y, z) of degree total - k. This layout is what the x-elimination
// (Sylvester resultant) works on directly.
class TernForm {
public:
    TernForm() = default;             // zero form
    explicit TernForm(int degree);    // zero form of declared degree
    static TernForm monomial(int ex, int ey, int ez, Rat c = Rat(1));

    int degree() const { return deg_; }
    bool is_zero() const;
    int x_degree() const;  // largest k with x_coeff(k) != 0; -1 if zero
    const BinForm& x_coeff(int k) const;
    void add_x_coeff(int k, const BinForm& f);  // f of degree deg - k (or zero)

    Rat eval(const Rat& x, const Rat& y, const Rat& z) const;

    TernForm operator-() const;
    friend TernForm operator+(const TernForm& a, const TernForm& b);
    friend TernForm operator*(const TernForm& a, const TernForm& b);
    friend TernForm operator*(const Rat& s, const TernForm& a);
    bool operator==(const TernForm& o) const;

    std::string str() const;

private:
    int deg_ = -1;
    std::vector<BinForm> cx_;  // index = x-power
};

// Point of the projective plane with a primitive integer representative whose
// first nonzero coordinate is positive.
struct ProjPointP2 {
    Int x, y, z;
    static ProjPointP2 normalized(const Rat& x, const Rat& y, const Rat& z);
    bool operator==(const ProjPointP2& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const ProjPointP2& o) const;
    std::string str() const;  // "[1:-1:0]"
};

// Thrown when the two forms share a factor, i.e. the common zero set is infinite.
class common_factor_error : public std::runtime_error {
public:
    common_factor_error(std::string msg, TernForm factor)
        : std::runtime_error(std::move(msg)), factor(std::move(factor)) {}
    TernForm factor;
};

struct CommonZerosResult {
    std::vector<ProjPointP2> points;
    // Set when elimination produced factors with no rational roots; the listed
    // points are then (sound but possibly incomplete) rational ones.
    bool irrational_remainder = false;
    BinForm residual_resultant;  // unfactored residual of the (y,z)-resultant
};

// gcd up to scalar; degree 0 result means coprime.
TernForm tern_gcd(const TernForm& f, const TernForm& g);

// Sylvester resultant eliminating x. Convention: if f does not involve x,
// Res_x(f, g) = f ^ deg_x(g) (and symmetrically).
BinForm resultant_x(const TernForm& f, const TernForm& g);

// All common projective zeros of two nonzero ternary forms; throws
// common_factor_error if the zero set is infinite.
CommonZerosResult common_zeros_p2(const TernForm& f, const TernForm& g);

}  // namespace x33
