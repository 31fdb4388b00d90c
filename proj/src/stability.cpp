#include "x33/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "x33/cohomology.hpp"

namespace x33 {

std::string Candidate::status_str() const {
    switch (status) {
        case Status::ExcludedByDegree: return "EXCLUDED_BY_DEGREE";
        case Status::ExcludedNoSections: return "EXCLUDED_NO_SECTIONS";
        case Status::UnresolvedLifting: return "UNRESOLVED_LIFTING";
    }
    return "";
}

std::string StabilityReport::verdict_str() const {
    switch (verdict) {
        case Verdict::Stable: return "STABLE";
        case Verdict::ConditionallyStable: {
            std::string out = "CONDITIONALLY_STABLE(";
            for (size_t i = 0; i < unresolved.size(); ++i) {
                if (i) out += ", ";
                out += "(" + std::to_string(unresolved[i].first) + "," +
                       std::to_string(unresolved[i].second) + ")";
            }
            return out + ")";
        }
        case Verdict::Unstable: return "UNSTABLE";
    }
    return "";
}

long section_upper_bound(int k, int l) {
    return h0_ox(-k, -l) + h0_ic(-k - 2, -l + 2);
}

namespace {
const H2Class kC1E{Rat(-2), Rat(2)};
}

Rat slope_gap(int k, int l, const Rat& n) {
    Polarization pol{n};
    return slope({Rat(k), Rat(l)}, 1, pol) - slope(kC1E, 2, pol);
}

std::vector<Candidate> enumerate_candidates(const Rat& n) {
    if (n <= 1) throw std::invalid_argument("polarization must satisfy N > 1");
    // Sections force either k,l <= 0 (excluded by degree for every N > 1, see
    // nonpositive_twists_excluded_symbolically) or k = -a-2, l = 2-b with
    // a,b >= 0; the destabilizing condition then bounds
    // a(2N+1) + b(N^2+2N) <= N^2 - 1. One margin row is scanned beyond the
    // box so the degree exclusions appear in the report.
    Rat n2 = n * n;
    long a_max = rat_floor_long((n2 - 1) / (2 * n + 1));
    long b_max = rat_floor_long((n2 - 1) / (n2 + 2 * n));
    std::vector<Candidate> out;
    for (long a = 0; a <= a_max + 1; ++a) {
        for (long b = 0; b <= b_max + 1; ++b) {
            Candidate c;
            c.k = static_cast<int>(-a - 2);
            c.l = static_cast<int>(2 - b);
            c.section_upper_bound = section_upper_bound(c.k, c.l);
            c.slope_gap = slope_gap(c.k, c.l, n);
            if (c.slope_gap < 0)
                c.status = Candidate::Status::ExcludedByDegree;
            else if (c.section_upper_bound == 0)
                c.status = Candidate::Status::ExcludedNoSections;
            else
                c.status = Candidate::Status::UnresolvedLifting;
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Candidate& l, const Candidate& r) {
        return std::make_pair(l.k, l.l) < std::make_pair(r.k, r.l);
    });
    return out;
}

bool nonpositive_twists_excluded_symbolically(std::string* detail) {
    // mu(O(k,l)) = k deg(w1) + l deg(w2) with both degree polynomials having
    // nonnegative coefficients, so mu <= 0 for k,l <= 0 and N > 0; and
    // 2 mu(E) = 6(N-1)(N+1) > 0 for N > 1. Hence the slope gap is negative.
    RatPoly d10 = degree_symbolic({Rat(1), Rat(0)});
    RatPoly d01 = degree_symbolic({Rat(0), Rat(1)});
    RatPoly de = degree_symbolic(kC1E);
    auto nonneg_coeffs = [](const RatPoly& p) {
        for (const auto& c : p.coeffs())
            if (c < 0) return false;
        return !p.is_zero();
    };
    bool ok = nonneg_coeffs(d10) && nonneg_coeffs(d01);
    RatPoly factored = Rat(6) * (RatPoly::from_coeffs({Rat(-1), Rat(1)}) *
                                 RatPoly::from_coeffs({Rat(1), Rat(1)}));
    ok = ok && (de == factored);
    // Linearity of the degree in c1 on the lattice generators.
    RatPoly sum = degree_symbolic({Rat(1), Rat(1)});
    ok = ok && (sum == d10 + d01);
    if (detail) {
        *detail = "deg(w1) = " + d10.str("N") + ", deg(w2) = " + d01.str("N") +
                  " (nonnegative coefficients); deg(E) = " + de.str("N") +
                  " = 6(N-1)(N+1) > 0 for N > 1";
    }
    return ok;
}

StabilityReport verdict(const Rat& n) {
    if (n <= 1) throw std::invalid_argument("polarization must satisfy N > 1");
    StabilityReport rep;
    rep.n = n;
    rep.candidates = enumerate_candidates(n);
    std::string lemma;
    if (!nonpositive_twists_excluded_symbolically(&lemma))
        throw std::logic_error("symbolic exclusion of nonpositive twists failed");
    rep.notes.push_back("subsheaves O(k,l) with k,l <= 0 are excluded symbolically: " + lemma);
    rep.notes.push_back(
        "trusted external fact: every line bundle on X is O(k,l) (restriction from the ambient "
        "product), so line-bundle subsheaves exhaust the double-dual reduction");
    for (const auto& c : rep.candidates)
        if (c.status == Candidate::Status::UnresolvedLifting)
            rep.unresolved.emplace_back(c.k, c.l);
    if (rep.unresolved.empty()) {
        rep.verdict = StabilityReport::Verdict::Stable;
    } else {
        rep.verdict = StabilityReport::Verdict::ConditionallyStable;
        rep.notes.push_back(
            "unresolved candidates have sections of the twisted ideal sheaf only; whether they "
            "lift to sections of the twisted bundle depends on the extension class, which is not "
            "computed here");
    }
    return rep;
}

}  // namespace x33
