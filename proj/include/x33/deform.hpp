#pragma once

#include <array>
#include <string>
#include <vector>

#include "x33/binform.hpp"
#include "x33/construct.hpp"
#include "x33/p1split.hpp"
#include "x33/ratmat.hpp"

namespace x33 {

// First-order direction s = alpha y + beta z of moving the line C inside its
// plane fibre; (0,0) is excluded from obstruction queries.
struct DeformationDirection {
    Rat alpha, beta;
    bool is_zero() const { return alpha == 0 && beta == 0; }
    std::string str() const;
};

struct FirstOrder {
    SplittingType splitting;  // {1, -3} for every admissible perturbation
    long dimension = 0;       // h^0 of the splitting
    std::array<DeformationDirection, 2> basis;
};
// Splitting type of the normal bundle of C from the construction data; errors
// if the derived bundle map is degenerate.
FirstOrder first_order(const ConstructionData& data);
FirstOrder first_order_from_map(const BundleMapP1& map);

// The three entries of the normal-bundle map over the dual numbers along the
// thickened line x = eps (alpha y + beta z), u = v = 0.
std::array<DualBinForm, 3> eps_normal_map(const DeformationDirection& dir,
                                          const ConstructionData& data);

// Linear system M (a,b)^T = rhs(alpha,beta) whose infeasibility is the
// second-order obstruction. Rows follow the fixed basis y^3, y^2 z, y z^2, z^3;
// columns hold the coefficients of the two nonzero map entries; the right-hand
// side entries are quadratic forms in (alpha, beta).
struct ObstructionSystem {
    RatMat m;                           // 4 x 2
    std::array<BinForm, 4> rhs_sym;     // degree-2 forms in (alpha, beta)
    ObstructionSystem() : m(4, 2) {}

    std::vector<Rat> rhs_at(const DeformationDirection& dir) const;
    static const std::array<const char*, 4>& basis_names();
};
ObstructionSystem second_order_system(const ConstructionData& data);

// True iff the direction admits no second-order extension.
bool obstructed(const DeformationDirection& dir, const ConstructionData& data);

enum class ObstructionStatus { AllObstructed, NotAllObstructed, Inconclusive };

struct ModuliVerdict {
    long first_order_dim = 0;
    ObstructionStatus status = ObstructionStatus::Inconclusive;
    std::vector<BinForm> compatibility_forms;  // in (alpha, beta)
    BinForm compat_gcd;
    std::string local_ring;  // set when every direction is obstructed
    std::string str() const;
};
// Decides obstruction of every nonzero direction at once: the gcd of the
// compatibility forms is 1 iff they have no common zero over any extension.
ModuliVerdict obstructed_all(const ConstructionData& data);

// Which linear forms g0 can appear as the restriction of a section of the
// thickened normal bundle, and whether s itself is attained.
struct RestrictionImage {
    long dimension = 0;
    std::vector<std::array<Rat, 2>> basis;  // coordinates of attainable g0
    bool s_attained = false;
};
RestrictionImage restriction_image(const DeformationDirection& dir,
                                   const ConstructionData& data);

// All designated coefficients of q, dp/du|_C, dp/dv|_C have |.| < 1/10.
bool perturbation_bound_ok(const ConstructionData& data);

}  // namespace x33
