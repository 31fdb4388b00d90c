#pragma once

#include <array>

namespace x33::claims {

// Closed vocabulary of the claims this toolkit certifies. Every check record
// carries exactly one of these anchor strings.
inline constexpr const char* kSerreFeasibility = "H^2(L^*) = 0 for L = O(-2,2)";
inline constexpr const char* kH1OxM22 = "H^1(O_X(-2,2)) = 0";
inline constexpr const char* kH1IdealM22 = "H^1(I_C(-2,2)) = 0";
inline constexpr const char* kOxSections = "O_X(a,b) has sections if and only if a>=0 and b>=0";
inline constexpr const char* kIdealSections = "H^0(I_C(a,b)) != 0 if and only if a>=0, b>=1";
inline constexpr const char* kEndDeformations = "H^1(End E) = C^2";
inline constexpr const char* kNormalSplitting = "nu_{C/X} = O_C(1) + O_C(-3)";
inline constexpr const char* kNormalSections = "H^0(nu_{C/X}) = C^2";
inline constexpr const char* kChernE = "c_1(E) = 2w2 - 2w1 and c_2(E) = w2^2/3";
inline constexpr const char* kChernA = "c_1(A) = 0, c_2(A) = w1^2 + 4/3 w2^2 indivisible";
inline constexpr const char* kDegreeE = "c_1(E).(N w1 + w2)^2 = 6(N^2 - 1)";
inline constexpr const char* kDegreeTwist = "c_1(E(2,-1)).(N w1 + w2)^2 = 12(2N + 1)";
inline constexpr const char* kObstructedDir = "s is not in the image of the restriction map";
inline constexpr const char* kObstructedAll =
    "deformations are completely obstructed to second order";
inline constexpr const char* kModuliRing =
    "moduli component is a thickened point with ring C[eps,eta]/(eps^2, eps eta, eta^2)";
inline constexpr const char* kStability = "E is slope-stable for N w1 + w2, N > 1";
inline constexpr const char* kBaseLocus = "the base locus of the linear system is exactly f";
inline constexpr const char* kLocalSmoothness = "[1:-1:0] does not lie on X";
inline constexpr const char* kPerturbationBound =
    "designated perturbation coefficients are less than 1/10";

inline constexpr std::array<const char*, 19> all = {
    kSerreFeasibility, kH1OxM22,        kH1IdealM22,   kOxSections,     kIdealSections,
    kEndDeformations,  kNormalSplitting, kNormalSections, kChernE,       kChernA,
    kDegreeE,          kDegreeTwist,    kObstructedDir, kObstructedAll, kModuliRing,
    kStability,        kBaseLocus,      kLocalSmoothness, kPerturbationBound,
};

}  // namespace x33::claims
