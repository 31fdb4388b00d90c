#pragma once

#include <string>
#include <vector>

#include "x33/rational.hpp"

namespace x33 {

// Homogeneous form in two variables (y, z by default). The degree is declared:
// a form may carry zero coefficients in every slot (a typed zero) without the
// representation collapsing it to a lower degree. The canonical zero form has
// conventional degree -infinity, reported as degree() == kZeroDegree.
class BinForm {
public:
    static constexpr int kZeroDegree = -1;

    BinForm() = default;                 // canonical zero form
    explicit BinForm(int declared_degree);  // zero form of a declared degree
    // c[k] is the coefficient of y^(d-k) z^k, k = 0..d.
    static BinForm from_coeffs(int degree, std::vector<Rat> c);
    static BinForm monomial(int deg_y, int deg_z, Rat c = Rat(1));

    bool is_zero() const;
    // Declared degree (kZeroDegree for the canonical zero form).
    int degree() const { return deg_; }
    Rat coeff(int k) const;  // of y^(degree-k) z^k
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& y, const Rat& z) const;
    Rat max_abs_coeff() const;

    BinForm operator-() const;
    friend BinForm operator+(const BinForm& a, const BinForm& b);
    friend BinForm operator-(const BinForm& a, const BinForm& b);
    friend BinForm operator*(const BinForm& a, const BinForm& b);
    friend BinForm operator*(const Rat& s, const BinForm& a);
    // Mathematical equality: all zero forms are equal regardless of declared degree.
    bool operator==(const BinForm& o) const;

    bool divides(const BinForm& f) const;
    BinForm exact_div(const BinForm& g) const;  // throws if not divisible

    std::string str(const std::string& vy = "y", const std::string& vz = "z") const;

private:
    int deg_ = kZeroDegree;
    std::vector<Rat> c_;
};

// Monic gcd of a list of binary forms; gcd == 1 certifies that the inputs have
// no common projective zero over any field extension. Throws on all-zero input.
BinForm binform_gcd(const std::vector<BinForm>& fs);

// Pair f0 + eps f1 over the dual numbers (eps^2 = 0).
struct DualBinForm {
    BinForm val;  // f0
    BinForm eps;  // f1

    friend DualBinForm operator+(const DualBinForm& a, const DualBinForm& b) {
        return {a.val + b.val, a.eps + b.eps};
    }
    friend DualBinForm operator*(const DualBinForm& a, const DualBinForm& b) {
        return {a.val * b.val, a.val * b.eps + a.eps * b.val};
    }
    bool operator==(const DualBinForm& o) const { return val == o.val && eps == o.eps; }
    std::string str() const;
};

}  // namespace x33
