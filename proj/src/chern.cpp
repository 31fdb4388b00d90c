#include "x33/chern.hpp"

#include <stdexcept>

namespace x33 {

namespace {

std::string lin_str(const Rat& a, const Rat& b, const char* e1, const char* e2) {
    if (a == 0 && b == 0) return "0";
    std::string out;
    auto piece = [&](const Rat& c, const char* sym) {
        if (c == 0) return;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1) out += rat_str(mag) + " ";
        out += sym;
    };
    piece(a, e1);
    piece(b, e2);
    return out;
}

// Element of Q[w1,w2]/(w1^3, w2^3): coefficient grid c[i][j] on w1^i w2^j.
struct AmbientClass {
    std::array<std::array<Rat, 3>, 3> c{};

    static AmbientClass w1(int i, int j) {
        AmbientClass a;
        a.c[i][j] = 1;
        return a;
    }
    AmbientClass mul(const AmbientClass& o) const {
        AmbientClass r;  // truncates at w1^3 = w2^3 = 0
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (c[i][j] == 0) continue;
                for (int k = 0; k + i < 3; ++k)
                    for (int l = 0; l + j < 3; ++l)
                        r.c[i + k][j + l] += c[i][j] * o.c[k][l];
            }
        return r;
    }
    Rat integral_p() const { return c[2][2]; }  // against int_P w1^2 w2^2 = 1
};

AmbientClass ambient_monomial(int i, int j) {
    AmbientClass a;
    if (i < 3 && j < 3) a.c[i][j] = 1;
    return a;
}

}  // namespace

std::string H2Class::str() const { return lin_str(a, b, "w1", "w2"); }
std::string H4Class::str() const { return lin_str(p, q, "w1^2", "w2^2"); }

H4Class h2_mul(const H2Class& c, const H2Class& d) {
    // w1 w2 reduces to w1^2 + w2^2 on the hypersurface.
    Rat cross = c.a * d.b + c.b * d.a;
    return {c.a * d.a + cross, c.b * d.b + cross};
}

H4Class h2_square(const H2Class& c) { return h2_mul(c, c); }

const std::array<Rat, 4>& primitive_integrals() {
    static const std::array<Rat, 4>& vals = *new std::array<Rat, 4>([] {
        std::array<Rat, 4> v;
        AmbientClass hyp;  // class of the (3,3) divisor
        hyp.c[1][0] = 3;
        hyp.c[0][1] = 3;
        for (int k = 0; k <= 3; ++k) {
            // integral over X of w1^(3-k) w2^k, built as a product of the
            // H^2 generators and pushed forward to P
            AmbientClass prod = ambient_monomial(0, 0);
            for (int t = 0; t < 3 - k; ++t) prod = prod.mul(ambient_monomial(1, 0));
            for (int t = 0; t < k; ++t) prod = prod.mul(ambient_monomial(0, 1));
            v[k] = prod.mul(hyp).integral_p();
        }
        return v;
    }());
    return vals;
}

Rat integrate_x(const H4Class& c4, const H2Class& c2) {
    const auto& I = primitive_integrals();  // w1^3, w1^2 w2, w1 w2^2, w2^3
    return c4.p * (c2.a * I[0] + c2.b * I[1]) + c4.q * (c2.a * I[2] + c2.b * I[3]);
}

Rat degree(const H2Class& c1, const Polarization& pol) {
    return integrate_x(h2_square({pol.n, Rat(1)}), c1);
}

RatPoly degree_symbolic(const H2Class& c1) {
    const auto& I = primitive_integrals();
    // (N w1 + w2)^2 = (N^2 + 2N) w1^2 + (1 + 2N) w2^2 after reduction.
    RatPoly n = RatPoly::monomial(1, Rat(1));
    RatPoly p_coef = n * n + Rat(2) * n;
    RatPoly q_coef = RatPoly(Rat(1)) + Rat(2) * n;
    RatPoly deg = p_coef * RatPoly(c1.a * I[0] + c1.b * I[1]) +
                  q_coef * RatPoly(c1.a * I[2] + c1.b * I[3]);
    return deg;
}

Rat slope(const H2Class& c1, int rank, const Polarization& pol) {
    if (rank < 1) throw std::invalid_argument("slope needs rank >= 1");
    return degree(c1, pol) / rank;
}

std::pair<H2Class, H4Class> twist_chern(const H2Class& c1, const H4Class& c2, int k, int l) {
    H2Class delta{Rat(k), Rat(l)};
    H2Class c1t{c1.a + 2 * delta.a, c1.b + 2 * delta.b};
    H4Class c2t = c2 + h2_mul(c1, delta) + h2_square(delta);
    return {c1t, c2t};
}

Divisibility indivisibility(const H4Class& c) {
    Rat m3 = 3 * c.p, n3 = 3 * c.q;
    if (m3.get_den() != 1 || n3.get_den() != 1)
        return {Divisibility::Kind::NonIntegral, Int(0), Int(0), Int(0)};
    Int m(m3), n(n3);
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return {Divisibility::Kind::Indivisible, Int(1), m, n};
    return {Divisibility::Kind::DivisibleBy, g, m, n};
}

std::string Divisibility::str() const {
    switch (kind) {
        case Kind::NonIntegral: return "non-integral";
        case Kind::Indivisible:
            return "indivisible (integral coordinates (" + m.get_str() + "," + n.get_str() + "))";
        case Kind::DivisibleBy:
            return "divisible by " + divisor.get_str() + " (integral coordinates (" +
                   m.get_str() + "," + n.get_str() + "))";
    }
    return "";
}

}  // namespace x33
