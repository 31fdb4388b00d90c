#include "x33/ratpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace x33 {

RatPoly::RatPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

RatPoly RatPoly::from_coeffs(std::vector<Rat> c) {
    RatPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

RatPoly RatPoly::monomial(int degree, Rat c) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    RatPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, Rat(0));
        p.c_[degree] = std::move(c);
    }
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[i];
}

Rat RatPoly::leading() const {
    if (is_zero()) return Rat(0);
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly::from_coeffs(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly::from_coeffs(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    if (s == 0) return RatPoly();
    RatPoly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rat RatPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void RatPoly::divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    std::vector<Rat> quot;
    int db = b.degree();
    if (a.degree() >= db) quot.assign(a.degree() - db + 1, Rat(0));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        int dr = static_cast<int>(rem.size()) - 1;
        if (dr < db) break;
        Rat f = rem.back() / b.c_.back();
        quot[dr - db] = f;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
        rem.pop_back();
    }
    q = RatPoly::from_coeffs(std::move(quot));
    r = RatPoly::from_coeffs(std::move(rem));
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = Rat(1) / c_.back();
    return inv * *this;
}

namespace {

std::vector<Int> divisors(Int n) {
    // Positive divisors by trial division; inputs here are desk-scale.
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

PolyRoots RatPoly::rational_roots() const {
    PolyRoots out;
    if (is_zero() || degree() == 0) {
        out.residual = *this;
        return out;
    }
    RatPoly f = *this;
    // Peel roots at zero first.
    int zero_mult = 0;
    while (!f.is_zero() && f.coeff(0) == 0) {
        std::vector<Rat> shifted(f.c_.begin() + 1, f.c_.end());
        f = RatPoly::from_coeffs(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);
    if (f.degree() >= 1) {
        // Clear denominators to an integer polynomial for the root bound.
        Int lcm(1);
        for (const auto& c : f.c_) {
            Int den = c.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        std::vector<Int> ic;
        ic.reserve(f.c_.size());
        for (const auto& c : f.c_) ic.push_back(Int(c * lcm));
        std::vector<Int> ps = divisors(ic.front());
        std::vector<Int> qs = divisors(ic.back());
        for (const Int& p : ps) {
            for (const Int& q : qs) {
                for (int sign : {1, -1}) {
                    Rat cand(sign * p, q);
                    cand.canonicalize();
                    int mult = 0;
                    while (f.degree() >= 1 && f.eval(cand) == 0) {
                        RatPoly lin = RatPoly::from_coeffs({-cand, Rat(1)});
                        RatPoly quo, rem;
                        divrem(f, lin, quo, rem);
                        f = quo;
                        ++mult;
                    }
                    if (mult > 0) out.roots.emplace_back(cand, mult);
                }
            }
        }
    }
    out.residual = f;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    return out;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out += rat_str(mag);
        } else {
            if (!unit) out += rat_str(mag) + " ";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace x33
