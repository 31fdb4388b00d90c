#pragma once

#include <string>
#include <vector>

#include "x33/biform.hpp"
#include "x33/chern.hpp"
#include "x33/cohomology.hpp"

namespace x33 {

struct LineBundleX {
    int a = 0, b = 0;
    LineBundleX twist(int k, int l) const { return {a + k, b + l}; }
    LineBundleX negated() const { return {-a, -b}; }
    std::string str() const;
};

// The fixed (3,3) form x^2 y w^3 + z^2 y v w^2 + z^3 u w^2 + (x+y)^3 v w^2.
BiForm canonical_threefold_form();

// Data of the construction: the hypersurface equation F = F0 + p, the twist
// L used for the Serre step, and the class of the line C in H^4.
struct ConstructionData {
    BiForm F;
    BiForm p;
    LineBundleX L{-2, 2};
    H4Class curve_class{Rat(0), rat(1, 3)};

    static ConstructionData standard();                      // p = 0
    static ConstructionData with_perturbation(const BiForm& p);
    std::string digest_text() const;  // canonical text of (F, p)
};

enum class Feasibility { Feasible, Unknown };
// Feasible iff h^2(O_X(-L)) is known to vanish; the obstruction class itself
// is not computed, so a nonzero (or undetermined) h^2 only yields Unknown.
Feasibility serre_feasible(const LineBundleX& L);

// The record of 0 -> O -> E -> I_C (x) L -> 0 and its twist A = E(1,-1).
struct SequenceRecord {
    LineBundleX L;
    H2Class c1_e;
    H4Class c2_e;
    H2Class c1_a;
    H4Class c2_a;
    std::vector<std::string> notes;
};
SequenceRecord build_E(const ConstructionData& data);  // throws when not feasible

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct CheckReport {
    std::vector<SubCheck> checks;
    bool pass() const;
    std::string summary() const;
};

struct BaseLocusOptions {
    // Negative-control hook: drop the x^2 y generators of the linear system.
    bool include_double_line_generators = true;
};
// Certifies that the linear system of (3,3) forms vanishing on
// f = {x^2 y = 0 = u = v} has base locus exactly f.
CheckReport base_locus_check(const BaseLocusOptions& opts = {});

// Certifies that dF/du and dF/dv, restricted to the fibre over the base point,
// vanish simultaneously only off the hypersurface.
CheckReport local_smoothness_check(const ConstructionData& data);

}  // namespace x33
