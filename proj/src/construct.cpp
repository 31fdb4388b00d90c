#include "x33/construct.hpp"

#include <set>
#include <stdexcept>

namespace x33 {

std::string LineBundleX::str() const {
    return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

BiForm canonical_threefold_form() {
    BiForm f(3, 3);
    auto mono = [](int x, int y, int z, int u, int v, int w) {
        return Monomial6{{x, y, z, u, v, w}};
    };
    f.add_term(mono(2, 1, 0, 0, 0, 3), Rat(1));  // x^2 y w^3
    f.add_term(mono(0, 1, 2, 0, 1, 2), Rat(1));  // z^2 y v w^2
    f.add_term(mono(0, 0, 3, 1, 0, 2), Rat(1));  // z^3 u w^2
    // (x+y)^3 v w^2
    f.add_term(mono(3, 0, 0, 0, 1, 2), Rat(1));
    f.add_term(mono(2, 1, 0, 0, 1, 2), Rat(3));
    f.add_term(mono(1, 2, 0, 0, 1, 2), Rat(3));
    f.add_term(mono(0, 3, 0, 0, 1, 2), Rat(1));
    return f;
}

namespace {

bool vanishes_on_f(const Monomial6& m) {
    // Divisible by u, by v, or by x^2 y.
    return m.e[VU] >= 1 || m.e[VV] >= 1 || (m.e[VX] >= 2 && m.e[VY] >= 1);
}

void validate_perturbation(const BiForm& p) {
    if (p.is_zero()) return;
    if (p.bidegree() != std::make_pair(3, 3))
        throw std::invalid_argument("perturbation must have bidegree (3,3)");
    for (const auto& [m, c] : p.terms())
        if (!vanishes_on_f(m))
            throw std::invalid_argument("perturbation term " + m.str() +
                                        " does not vanish on the degenerate fibre");
}

}  // namespace

ConstructionData ConstructionData::standard() {
    ConstructionData d;
    d.F = canonical_threefold_form();
    d.p = BiForm(3, 3);
    return d;
}

ConstructionData ConstructionData::with_perturbation(const BiForm& p) {
    validate_perturbation(p);
    ConstructionData d;
    d.p = p.is_zero() ? BiForm(3, 3) : p;
    d.F = canonical_threefold_form() + d.p;
    return d;
}

std::string ConstructionData::digest_text() const {
    return "F:\n" + F.str() + "p:\n" + p.str();
}

Feasibility serre_feasible(const LineBundleX& L) {
    CohTable t = hypersurface_coh(-L.a, -L.b);
    if (t.h[2] && *t.h[2] == 0) return Feasibility::Feasible;
    return Feasibility::Unknown;
}

SequenceRecord build_E(const ConstructionData& data) {
    if (serre_feasible(data.L) != Feasibility::Feasible)
        throw std::runtime_error("construction not feasible: h^2(" + data.L.negated().str() +
                                 ") does not vanish");
    SequenceRecord rec;
    rec.L = data.L;
    rec.c1_e = {Rat(data.L.a), Rat(data.L.b)};
    rec.c2_e = data.curve_class;
    auto [c1a, c2a] = twist_chern(rec.c1_e, rec.c2_e, 1, -1);
    rec.c1_a = c1a;
    rec.c2_a = c2a;
    rec.notes.push_back("0 -> O -> E -> I_C" + rec.L.str() + " -> 0");
    rec.notes.push_back("rank 2, c1(E) = " + rec.c1_e.str() + ", c2(E) = " + rec.c2_e.str());
    rec.notes.push_back("A = E(1,-1): c1(A) = " + rec.c1_a.str() + ", c2(A) = " + rec.c2_a.str());
    return rec;
}

bool CheckReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string CheckReport::summary() const {
    std::string out;
    for (const auto& c : checks) {
        out += (c.pass ? "[ok]   " : "[FAIL] ") + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    return out;
}

CheckReport base_locus_check(const BaseLocusOptions& opts) {
    CheckReport rep;

    // Generators u*m, v*m over monomials m of bidegree (3,2), and x^2 y * m'
    // over monomials m' of bidegree (0,3).
    std::vector<Monomial6> gens;
    auto push = [&](Monomial6 m) { gens.push_back(m); };
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            for (int p = 0; p <= 2; ++p)
                for (int q = 0; p + q <= 2; ++q) {
                    int k = 3 - i - j, r = 2 - p - q;
                    push({{i, j, k, p + 1, q, r}});  // u * m
                    push({{i, j, k, p, q + 1, r}});  // v * m
                }
    if (opts.include_double_line_generators) {
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 3; ++q) push({{2, 1, 0, p, q, 3 - p - q}});
    }

    {
        // 2 h^0(O_P(3,2)) + h^0(O_P(0,3)) products; distinct monomials are
        // automatically independent. Products of the u- and v-families can
        // coincide (u x^3 v w = v x^3 u w), so the span is counted against an
        // independent enumeration of the monomials divisible by u, v or x^2 y.
        std::set<Monomial6> uniq(gens.begin(), gens.end());
        size_t ideal_monomials = 0;
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                for (int p = 0; p <= 3; ++p)
                    for (int q = 0; p + q <= 3; ++q) {
                        Monomial6 m{{i, j, 3 - i - j, p, q, 3 - p - q}};
                        if (m.e[VU] >= 1 || m.e[VV] >= 1 ||
                            (opts.include_double_line_generators && m.e[VX] >= 2 && m.e[VY] >= 1))
                            ++ideal_monomials;
                    }
        bool ok = gens.size() == (opts.include_double_line_generators ? 130u : 120u) &&
                  uniq.size() == ideal_monomials;
        rep.checks.push_back({"generator count and span", ok,
                              std::to_string(gens.size()) + " generator products spanning " +
                                  std::to_string(uniq.size()) + " independent monomials"});
    }

    {
        bool all = true;
        std::string bad;
        for (const auto& m : gens) {
            if (!(m.e[VU] >= 1 || m.e[VV] >= 1 || (m.e[VX] >= 2 && m.e[VY] >= 1))) {
                all = false;
                bad = m.str();
                break;
            }
        }
        rep.checks.push_back({"each generator vanishes on the degenerate fibre", all,
                              all ? "divisibility by u, v or x^2 y" : "offender " + bad});
    }

    {
        // On u = v = 0, w = 1 the restricted system must span exactly <x^2 y>.
        TernForm target = TernForm::monomial(2, 1, 0);
        bool any_nonzero = false, all_multiples = true;
        for (const auto& m : gens) {
            BiForm g = BiForm::monomial(m);
            TernForm t = g.restrict_to_fibre();
            if (t.is_zero()) continue;
            any_nonzero = true;
            if (!(t == target)) all_multiples = false;
        }
        bool ok = any_nonzero && all_multiples;
        rep.checks.push_back({"restricted system on the central fibre cuts out {x^2 y = 0}", ok,
                              any_nonzero ? (all_multiples ? "span is <x^2 y>" : "extra directions")
                                          : "restricted system is empty"});
    }

    {
        // Patches (one of x,y,z nonzero) x (one of u,v,w nonzero); on the part
        // of each patch with (u,v) != (0,0) some generator is a monomial in
        // the coordinates known to be nonzero.
        const Var first[3] = {VX, VY, VZ};
        const Var second[3] = {VU, VV, VW};
        bool all_ok = true;
        std::string detail;
        for (Var xi : first) {
            for (Var eta : second) {
                std::vector<std::pair<Var, std::string>> cases;
                if (eta == VW) {
                    cases = {{VU, "u nonzero"}, {VV, "v nonzero"}};
                } else {
                    cases = {{eta, "whole patch"}};
                }
                for (auto [extra, label] : cases) {
                    bool found = false;
                    for (const auto& m : gens) {
                        bool supported = true;
                        for (int v = 0; v < 6; ++v) {
                            if (m.e[v] == 0) continue;
                            if (v != xi && v != eta && v != extra) supported = false;
                        }
                        if (supported) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        all_ok = false;
                        detail = "no witness on patch (" + std::string(1, "xyzuvw"[xi]) + "," +
                                 std::string(1, "xyzuvw"[eta]) + ") case " + label;
                    }
                }
            }
        }
        rep.checks.push_back({"witness generators off the central fibre", all_ok,
                              all_ok ? "all 9 patches covered" : detail});
    }

    return rep;
}

CheckReport local_smoothness_check(const ConstructionData& data) {
    CheckReport rep;
    TernForm gu = data.F.partial(VU).restrict_to_fibre();
    TernForm gv = data.F.partial(VV).restrict_to_fibre();
    TernForm f0 = data.F.restrict_to_fibre();
    rep.checks.push_back({"fibre partials computed", !gu.is_zero() && !gv.is_zero(),
                          "dF/du -> " + gu.str() + "; dF/dv -> " + gv.str()});

    CommonZerosResult zeros;
    try {
        zeros = common_zeros_p2(gu, gv);
    } catch (const common_factor_error& e) {
        rep.checks.push_back({"common zero locus is finite", false, e.what()});
        return rep;
    }
    rep.checks.push_back({"common zero locus is finite", true,
                          std::to_string(zeros.points.size()) + " rational point(s)"});

    if (zeros.irrational_remainder) {
        rep.checks.push_back({"all common zeros materialized", false,
                              "irrational roots present; residual " +
                                  zeros.residual_resultant.str()});
    } else {
        rep.checks.push_back({"all common zeros materialized", true, "resultant splits over Q"});
    }

    bool off_x = true;
    std::string points;
    for (const auto& pt : zeros.points) {
        Rat val = f0.eval(Rat(pt.x), Rat(pt.y), Rat(pt.z));
        if (!points.empty()) points += ", ";
        points += pt.str() + " (F = " + rat_str(val) + ")";
        if (val == 0) off_x = false;
    }
    rep.checks.push_back({"no common zero lies on the hypersurface", off_x && !zeros.irrational_remainder,
                          points.empty() ? "no rational common zeros" : points});

    if (data.p.is_zero()) {
        bool single = zeros.points.size() == 1 && !zeros.irrational_remainder &&
                      zeros.points[0] == ProjPointP2::normalized(Rat(1), Rat(-1), Rat(0));
        rep.checks.push_back({"unperturbed zero locus is exactly [1:-1:0]", single,
                              points.empty() ? "(none)" : points});
    }
    return rep;
}

}  // namespace x33
