#include "x33/ternary.hpp"

#include <algorithm>
#include <set>

#include "x33/ratpoly.hpp"

namespace x33 {

TernForm::TernForm(int degree) : deg_(degree) {
    if (degree < 0) throw std::invalid_argument("negative declared degree");
    cx_.assign(degree + 1, BinForm());
}

TernForm TernForm::monomial(int ex, int ey, int ez, Rat c) {
    TernForm f(ex + ey + ez);
    f.cx_[ex] = BinForm::monomial(ey, ez, std::move(c));
    return f;
}

bool TernForm::is_zero() const {
    for (const auto& c : cx_)
        if (!c.is_zero()) return false;
    return true;
}

int TernForm::x_degree() const {
    for (int k = static_cast<int>(cx_.size()) - 1; k >= 0; --k)
        if (!cx_[k].is_zero()) return k;
    return -1;
}

const BinForm& TernForm::x_coeff(int k) const {
    static const BinForm zero;
    if (k < 0 || k >= static_cast<int>(cx_.size())) return zero;
    return cx_[k];
}

void TernForm::add_x_coeff(int k, const BinForm& f) {
    if (deg_ < 0) throw std::invalid_argument("add_x_coeff on degree-less zero form");
    if (k < 0 || k > deg_) throw std::invalid_argument("x-power out of range");
    if (!f.is_zero() && f.degree() != deg_ - k)
        throw std::invalid_argument("coefficient degree does not match grading");
    if (cx_[k].is_zero() && cx_[k].degree() == BinForm::kZeroDegree)
        cx_[k] = f;
    else
        cx_[k] = cx_[k] + f;
}

Rat TernForm::eval(const Rat& x, const Rat& y, const Rat& z) const {
    Rat acc(0), xp(1);
    for (const auto& c : cx_) {
        if (!c.is_zero()) acc += xp * c.eval(y, z);
        xp *= x;
    }
    return acc;
}

TernForm TernForm::operator-() const {
    TernForm f(*this);
    for (auto& c : f.cx_) c = -c;
    return f;
}

TernForm operator+(const TernForm& a, const TernForm& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.deg_ != b.deg_) throw std::invalid_argument("degree mismatch in ternary form sum");
    TernForm f(a.deg_);
    for (int k = 0; k <= a.deg_; ++k) {
        const BinForm& l = a.cx_[k];
        const BinForm& r = b.cx_[k];
        if (l.is_zero())
            f.cx_[k] = r;
        else if (r.is_zero())
            f.cx_[k] = l;
        else
            f.cx_[k] = l + r;
    }
    return f;
}

TernForm operator*(const TernForm& a, const TernForm& b) {
    if (a.is_zero() || b.is_zero()) return TernForm();
    TernForm f(a.deg_ + b.deg_);
    for (int i = 0; i <= a.deg_; ++i) {
        if (a.cx_[i].is_zero()) continue;
        for (int j = 0; j <= b.deg_; ++j) {
            if (b.cx_[j].is_zero()) continue;
            f.add_x_coeff(i + j, a.cx_[i] * b.cx_[j]);
        }
    }
    return f;
}

TernForm operator*(const Rat& s, const TernForm& a) {
    TernForm f(a);
    for (auto& c : f.cx_) c = s * c;
    return f;
}

bool TernForm::operator==(const TernForm& o) const {
    bool za = is_zero(), zb = o.is_zero();
    if (za || zb) return za && zb;
    if (deg_ != o.deg_) return false;
    for (int k = 0; k <= deg_; ++k)
        if (!(cx_[k] == o.cx_[k])) return false;
    return true;
}

std::string TernForm::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = static_cast<int>(cx_.size()) - 1; k >= 0; --k) {
        if (cx_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string part = cx_[k].str();
        if (k > 0) {
            std::string xp = "x" + std::string(k > 1 ? "^" + std::to_string(k) : "");
            if (part == "1")
                part = xp;
            else
                part = "(" + part + ") " + xp;
        }
        out += part;
    }
    return out;
}

namespace {

// Polynomial in x with binary-form coefficients; scratch type for the
// pseudo-remainder sequence and the Sylvester determinant.
struct XPoly {
    std::vector<BinForm> c;  // c[k] on x^k

    int deg() const {
        for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
            if (!c[k].is_zero()) return k;
        return -1;
    }
    bool is_zero() const { return deg() < 0; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

XPoly to_xpoly(const TernForm& f) {
    XPoly p;
    for (int k = 0; k <= f.degree(); ++k) p.c.push_back(f.x_coeff(k));
    p.trim();
    return p;
}

TernForm from_xpoly(const XPoly& p) {
    if (p.is_zero()) return TernForm();
    int total = -1;
    for (int k = 0; k <= p.deg(); ++k)
        if (!p.c[k].is_zero()) total = std::max(total, p.c[k].degree() + k);
    TernForm f(total);
    for (int k = 0; k <= p.deg(); ++k)
        if (!p.c[k].is_zero()) f.add_x_coeff(k, p.c[k]);
    return f;
}

BinForm content(const XPoly& p) {
    std::vector<BinForm> nz;
    for (const auto& c : p.c)
        if (!c.is_zero()) nz.push_back(c);
    return binform_gcd(nz);
}

XPoly primitive_part(const XPoly& p) {
    if (p.is_zero()) return p;
    BinForm g = content(p);
    XPoly q;
    for (const auto& c : p.c) q.c.push_back(c.is_zero() ? BinForm() : c.exact_div(g));
    return q;
}

XPoly scale(const BinForm& s, const XPoly& p) {
    XPoly q;
    for (const auto& c : p.c) q.c.push_back(c.is_zero() ? BinForm() : s * c);
    return q;
}

XPoly sub_shifted(const XPoly& a, const XPoly& b, int shift) {
    // a - x^shift * b
    XPoly r = a;
    if (static_cast<int>(r.c.size()) < b.deg() + shift + 1)
        r.c.resize(b.deg() + shift + 1, BinForm());
    for (int k = 0; k <= b.deg(); ++k) {
        if (b.c[k].is_zero()) continue;
        BinForm& slot = r.c[k + shift];
        slot = slot.is_zero() && slot.degree() == BinForm::kZeroDegree ? -b.c[k] : slot - b.c[k];
    }
    r.trim();
    return r;
}

XPoly prem(XPoly a, const XPoly& b) {
    int db = b.deg();
    const BinForm& lcb = b.c[db];
    while (!a.is_zero() && a.deg() >= db) {
        int da = a.deg();
        BinForm lca = a.c[da];
        a = sub_shifted(scale(lcb, a), scale(lca, b), da - db);
    }
    return a;
}

XPoly prs_gcd(XPoly a, XPoly b) {
    // Primitive pseudo-remainder sequence; inputs primitive.
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        XPoly r = prem(a, b);
        a = std::move(b);
        if (r.is_zero())
            b = XPoly{};
        else
            b = primitive_part(r);
    }
    return a;
}

const BinForm kOneForm = BinForm::from_coeffs(0, {Rat(1)});

}  // namespace

TernForm tern_gcd(const TernForm& f, const TernForm& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    XPoly pf = to_xpoly(f), pg = to_xpoly(g);
    BinForm cont = binform_gcd({content(pf), content(pg)});
    XPoly pp = prs_gcd(primitive_part(pf), primitive_part(pg));
    TernForm cont_part = from_xpoly(XPoly{{cont}});
    return cont_part * from_xpoly(primitive_part(pp));
}

BinForm resultant_x(const TernForm& f, const TernForm& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero form");
    int m = f.x_degree(), n = g.x_degree();
    if (m == 0 && n == 0) throw std::invalid_argument("resultant needs an x-dependent form");
    if (m == 0) {
        BinForm r = kOneForm;
        for (int i = 0; i < n; ++i) r = r * f.x_coeff(0);
        return r;
    }
    if (n == 0) {
        BinForm r = kOneForm;
        for (int i = 0; i < m; ++i) r = r * g.x_coeff(0);
        return r;
    }
    int size = m + n;
    std::vector<std::vector<BinForm>> s(size, std::vector<BinForm>(size, BinForm()));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + k] = f.x_coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + k] = g.x_coeff(n - k);

    // Bareiss fraction-free elimination; divisions are exact.
    int sign = 1;
    BinForm prev = kOneForm;
    for (int k = 0; k + 1 < size; ++k) {
        if (s[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i) {
                if (!s[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return BinForm();
            std::swap(s[k], s[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                BinForm num = s[k][k] * s[i][j] - s[i][k] * s[k][j];
                s[i][j] = num.is_zero() ? BinForm() : num.exact_div(prev);
            }
            s[i][k] = BinForm();
        }
        prev = s[k][k];
    }
    BinForm det = s[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

ProjPointP2 ProjPointP2::normalized(const Rat& x, const Rat& y, const Rat& z) {
    Int l(1);
    for (const Rat* c : {&x, &y, &z}) {
        Int den = c->get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    Int ix(x * l), iy(y * l), iz(z * l);
    Int g;
    mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iz.get_mpz_t());
    if (g == 0) throw std::invalid_argument("zero vector is not a projective point");
    ix /= g;
    iy /= g;
    iz /= g;
    Int lead = ix != 0 ? ix : (iy != 0 ? iy : iz);
    if (lead < 0) {
        ix = -ix;
        iy = -iy;
        iz = -iz;
    }
    return {ix, iy, iz};
}

bool ProjPointP2::operator<(const ProjPointP2& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
}

std::string ProjPointP2::str() const {
    return "[" + x.get_str() + ":" + y.get_str() + ":" + z.get_str() + "]";
}

namespace {

RatPoly specialize_x(const TernForm& f, const Rat& y0, const Rat& z0) {
    std::vector<Rat> c;
    for (int k = 0; k <= f.x_degree(); ++k) c.push_back(f.x_coeff(k).eval(y0, z0));
    return RatPoly::from_coeffs(std::move(c));
}

}  // namespace

CommonZerosResult common_zeros_p2(const TernForm& f, const TernForm& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("common zeros of a zero form");
    TernForm h = tern_gcd(f, g);
    if (h.degree() > 0)
        throw common_factor_error("common factor " + h.str() + ": infinite zero set", h);

    CommonZerosResult out;
    out.residual_resultant = kOneForm;
    std::set<ProjPointP2> pts;
    if (f.eval(1, 0, 0) == 0 && g.eval(1, 0, 0) == 0)
        pts.insert(ProjPointP2::normalized(Rat(1), Rat(0), Rat(0)));

    std::vector<std::pair<Rat, Rat>> yz_roots;  // representatives (y0, z0)
    if (f.x_degree() > 0 || g.x_degree() > 0) {
        BinForm res = resultant_x(f, g);
        if (res.is_zero())
            throw std::logic_error("vanishing resultant for coprime forms");
        // Split the resultant into rational projective roots [y0:z0].
        std::vector<Rat> c;
        for (int k = 0; k <= res.degree(); ++k) c.push_back(res.coeff(k));
        RatPoly rp = RatPoly::from_coeffs(std::move(c));  // in t = z/y
        int ydrop = res.degree() - rp.degree();
        if (ydrop > 0) yz_roots.emplace_back(Rat(0), Rat(1));
        auto roots = rp.rational_roots();
        for (const auto& [t0, mult] : roots.roots) yz_roots.emplace_back(Rat(1), t0);
        if (roots.residual.degree() >= 1) {
            out.irrational_remainder = true;
            std::vector<Rat> rc = roots.residual.coeffs();
            out.residual_resultant =
                BinForm::from_coeffs(roots.residual.degree(), std::move(rc));
        }
    }

    for (const auto& [y0, z0] : yz_roots) {
        RatPoly f0 = specialize_x(f, y0, z0);
        RatPoly g0 = specialize_x(g, y0, z0);
        if (f0.is_zero() && g0.is_zero())
            throw std::logic_error("line of common zeros for coprime forms");
        RatPoly hx = f0.is_zero() ? g0.monic() : (g0.is_zero() ? f0.monic() : RatPoly::gcd(f0, g0));
        if (hx.degree() < 1) continue;
        auto xr = hx.rational_roots();
        for (const auto& [x0, mult] : xr.roots)
            pts.insert(ProjPointP2::normalized(x0, y0, z0));
        if (xr.residual.degree() >= 1) out.irrational_remainder = true;
    }

    for (const auto& p : pts) {
        Rat px(p.x), py(p.y), pz(p.z);
        if (f.eval(px, py, pz) != 0 || g.eval(px, py, pz) != 0)
            throw std::logic_error("candidate point fails verification");
        out.points.push_back(p);
    }
    return out;
}

}  // namespace x33
