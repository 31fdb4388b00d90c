#include "x33/binform.hpp"

#include <stdexcept>

#include "x33/ratpoly.hpp"

namespace x33 {

namespace {

// f = y^(ydrop) * F(t) with t = z/y: F built from the nonzero coefficient span.
// Returns {F, ydrop}; requires f nonzero.
std::pair<RatPoly, int> dehomogenize(const BinForm& f) {
    std::vector<Rat> c;
    for (int k = 0; k <= f.degree(); ++k) c.push_back(f.coeff(k));
    RatPoly p = RatPoly::from_coeffs(std::move(c));
    return {p, f.degree() - p.degree()};
}

BinForm rehomogenize(const RatPoly& p, int ydrop) {
    if (p.is_zero()) return BinForm();
    int d = p.degree() + ydrop;
    std::vector<Rat> c(d + 1, Rat(0));
    for (int k = 0; k <= p.degree(); ++k) c[k] = p.coeff(k);
    return BinForm::from_coeffs(d, std::move(c));
}

}  // namespace

BinForm::BinForm(int declared_degree) : deg_(declared_degree) {
    if (declared_degree < 0) throw std::invalid_argument("negative declared degree");
    c_.assign(declared_degree + 1, Rat(0));
}

BinForm BinForm::from_coeffs(int degree, std::vector<Rat> c) {
    if (degree < 0) throw std::invalid_argument("negative declared degree");
    if (static_cast<int>(c.size()) != degree + 1)
        throw std::invalid_argument("coefficient count does not match degree");
    BinForm f;
    f.deg_ = degree;
    f.c_ = std::move(c);
    return f;
}

BinForm BinForm::monomial(int deg_y, int deg_z, Rat c) {
    if (deg_y < 0 || deg_z < 0) throw std::invalid_argument("negative exponent");
    BinForm f(deg_y + deg_z);
    f.c_[deg_z] = std::move(c);
    return f;
}

bool BinForm::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

Rat BinForm::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

Rat BinForm::eval(const Rat& y, const Rat& z) const {
    Rat acc(0);
    Rat zp(1);
    std::vector<Rat> ypow(c_.size(), Rat(1));
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) ypow[i] = ypow[i + 1] * y;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != 0) acc += c_[k] * ypow[k] * zp;
        zp *= z;
    }
    return acc;
}

Rat BinForm::max_abs_coeff() const {
    Rat m(0);
    for (const auto& c : c_) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

BinForm BinForm::operator-() const {
    BinForm f(*this);
    for (auto& c : f.c_) c = -c;
    return f;
}

BinForm operator+(const BinForm& a, const BinForm& b) {
    if (a.is_zero() && a.deg_ == BinForm::kZeroDegree) return b;
    if (b.is_zero() && b.deg_ == BinForm::kZeroDegree) return a;
    if (a.deg_ != b.deg_) throw std::invalid_argument("degree mismatch in binary form sum");
    BinForm f(a);
    for (size_t k = 0; k < f.c_.size(); ++k) f.c_[k] += b.c_[k];
    return f;
}

BinForm operator-(const BinForm& a, const BinForm& b) { return a + (-b); }

BinForm operator*(const BinForm& a, const BinForm& b) {
    if (a.is_zero() || b.is_zero()) return BinForm();
    BinForm f(a.deg_ + b.deg_);
    for (int i = 0; i <= a.deg_; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j <= b.deg_; ++j) f.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return f;
}

BinForm operator*(const Rat& s, const BinForm& a) {
    BinForm f(a);
    for (auto& c : f.c_) c *= s;
    return f;
}

bool BinForm::operator==(const BinForm& o) const {
    bool za = is_zero(), zb = o.is_zero();
    if (za || zb) return za && zb;
    return deg_ == o.deg_ && c_ == o.c_;
}

bool BinForm::divides(const BinForm& f) const {
    if (is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    auto [pf, yf] = dehomogenize(f);
    auto [pg, yg] = dehomogenize(*this);
    if (yf < yg) return false;
    RatPoly q, r;
    RatPoly::divrem(pf, pg, q, r);
    return r.is_zero();
}

BinForm BinForm::exact_div(const BinForm& g) const {
    if (g.is_zero()) throw std::invalid_argument("division by zero form");
    if (is_zero()) return BinForm();
    auto [pf, yf] = dehomogenize(*this);
    auto [pg, yg] = dehomogenize(g);
    RatPoly q, r;
    RatPoly::divrem(pf, pg, q, r);
    if (!r.is_zero() || yf < yg) throw std::invalid_argument("inexact binary form division");
    return rehomogenize(q, yf - yg);
}

std::string BinForm::str(const std::string& vy, const std::string& vz) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= deg_; ++k) {
        const Rat& c = c_[k];
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        int ey = deg_ - k, ez = k;
        bool unit = (mag == 1);
        std::string vars;
        if (ey > 0) vars += vy + (ey > 1 ? "^" + std::to_string(ey) : "");
        if (ez > 0) {
            if (!vars.empty()) vars += " ";
            vars += vz + (ez > 1 ? "^" + std::to_string(ez) : "");
        }
        if (vars.empty()) {
            out += rat_str(mag);
        } else {
            if (!unit) out += rat_str(mag) + " ";
            out += vars;
        }
    }
    return out;
}

BinForm binform_gcd(const std::vector<BinForm>& fs) {
    bool any = false;
    for (const auto& f : fs)
        if (!f.is_zero()) any = true;
    if (!any) throw std::invalid_argument("gcd of all-zero forms");
    bool have = false;
    RatPoly g;
    int ydrop = 0;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        auto [p, yd] = dehomogenize(f);
        if (!have) {
            g = p.monic();
            ydrop = yd;
            have = true;
        } else {
            g = RatPoly::gcd(g, p);
            ydrop = std::min(ydrop, yd);
        }
    }
    return rehomogenize(g.monic(), ydrop);
}

std::string DualBinForm::str() const {
    if (eps.is_zero()) return val.str();
    std::string out = val.is_zero() ? "" : val.str();
    if (!out.empty()) out += " + ";
    out += "eps (" + eps.str() + ")";
    return out;
}

}  // namespace x33
