#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x33/p1split.hpp"
#include "x33/rational.hpp"

namespace x33 {

enum class Space { P, X };  // the ambient product or the (3,3) hypersurface

// h^0..h^4 (on P) or h^0..h^3 (on X) of a line bundle O(a,b); entries are
// nullopt where the long exact sequence does not force a value.
struct CohTable {
    Space space = Space::P;
    int a = 0, b = 0;
    std::vector<std::optional<long>> h;

    bool fully_known() const;
    long euler_char() const;  // requires fully_known()
    std::string str() const;  // "(1,0,0,1)" with "?" for unknowns
};

// Cohomology of O(d) on the projective plane: i in {0,1,2}.
long bott_p2(int d, int i);
// Cohomology of O(d) on the projective line.
long h0_p1(int d);
long h1_p1(int d);

// Kunneth table of O(a,b) on P = P^2 x P^2 (always fully known).
CohTable kunneth_p(int a, int b);

// Table of O_X(a,b) from the divisor sequence
// 0 -> O_P(a-3,b-3) -> O_P(a,b) -> O_X(a,b) -> 0; memoized, thread-safe.
CohTable hypersurface_coh(int a, int b);

// h^0(O_X(a,b)) = h^0(O_P(a,b)) - h^0(O_P(a-3,b-3)); exact because line
// bundles on P never have h^1.
long h0_ox(int a, int b);
// h^0 of the ideal sheaf of the line C = {x=u=v=0} twisted by (a,b), computed
// by explicit monomial linear algebra (kernel of restriction to C, minus the
// multiples of the defining equation). Memoized, thread-safe.
long h0_ic(int a, int b);

// Forced table of I_C(a,b) from 0 -> I_C(a,b) -> O_X(a,b) -> O_C(a) -> 0,
// seeded with the computed h^0(I_C(a,b)).
CohTable ideal_sheaf_coh(int a, int b);

// A finite exact sequence of Q-vector spaces with possibly unknown dimensions.
// The first and last terms must be zero.
struct SeqTerm {
    std::string label;
    std::optional<long> dim;
};
struct RankFact {
    int map_index;  // rank of the map terms[i] -> terms[i+1]
    long rank;
    std::string justification;
};
struct ExactSeq {
    std::vector<SeqTerm> terms;
    std::vector<RankFact> rank_facts;
};
struct Propagated {
    ExactSeq seq;                      // unknown dims filled where forced
    std::vector<std::string> fact_log; // every asserted rank fact, verbatim
};

// Models exactness as dim T_i = r_{i-1} + r_i with 0 <= r_i <= neighbour dims
// and propagates integer bounds to a fixpoint. Fills an unknown entry only
// when its feasible interval is a single point. Throws std::runtime_error
// ("inconsistent input dimensions") when the constraints are infeasible.
Propagated les_propagate(const ExactSeq& seq);

// The deformation-dimension chase for the rank-2 bundle built on O(-2,2):
// replays the long-exact-sequence argument ending in h^1(End E).
struct EndChase {
    long h1_end_e = -1;
    long h0_e = -1, h1_e = -1;        // intermediate values, both forced
    long h1_e_dual = -1, h2_e_dual = -1;
    std::vector<std::string> manual_assertions;  // exactly the human inputs
    std::vector<std::string> derived;            // machine-forced steps
};
EndChase end_deformation_dims();

}  // namespace x33
