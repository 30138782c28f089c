#ifndef SCPKIT_SCP2D_HPP
#define SCPKIT_SCP2D_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "scpkit/moments.hpp"
#include "scpkit/shifts.hpp"

namespace scpkit {

// The five independent quadratic data points, as squared weights:
// a = α₀₀², b = β₀₀², c = α₁₀², d = β₀₁², e = α₀₁². Commutativity forces
// f = β₁₀² = be/a; it is derived, never supplied.
struct QuadraticData {
    Rat a, b, c, d, e;

    QuadraticData(Rat a_, Rat b_, Rat c_, Rat d_, Rat e_);

    Rat f() const { return b * e / a; }
    QuadraticData swapped() const { return QuadraticData(b, a, d, c, f()); }

    // M(1) = [[1,a,b],[a,ac,be],[b,be,bd]].
    MomentMat m1() const;
    // The degree ≤ 2 moment table.
    MomentSeq2 moments() const;
    // Weight family of degree 1 (six squared weights incl. derived f).
    WeightFamily2 family() const;
};

enum class CompletionCase { rank1, a_eq_c, rank2, rank3_e_eq_c, rank3_e_lt_c };

std::string case_name(CompletionCase c, bool swapped);

// A solved completion: the four new squared weights p = α̂₂₀², q = α̂₁₁²,
// r = α̂₀₂², s = β̂₀₂², the flat M(2) with its localizing matrices, the
// Berger measure, and the extended weight family.
struct CompletionResult {
    CompletionCase case_tag = CompletionCase::rank1;
    bool swapped = false;
    int rank_m1 = 0;
    Rat p, q, r, s;
    MomentMat m2;
    MomentMat mx;
    MomentMat my;
    AtomicMeasure2 measure;
    std::optional<WeightFamily2> completion;
    std::optional<Rat> z;   // second y-axis atom height, rank-3 e<c case
    std::optional<Rat> y0;  // (0, y₀) atom height, rank-2 case
    std::optional<Rat> yc;  // (c, y_c) atom height, rank-2 case
};

// Solves the quadratic subnormal completion problem. Throws
// NoCompletionError exactly when M(1) is not positive semidefinite.
CompletionResult quadratic_scp(const QuadraticData& d, int depth = 6);

// The constructive flat extension for c ≥ e, a < c: new weights p = q = c,
// then r = c, s = d when e = c, else r = ef/d and s the unique root of
// det M_y(2)(s) = 0. Returns the weights and the completed flat M(2).
struct FlatM2 {
    Rat p, q, r, s;
    MomentMat m2;
};
FlatM2 build_flat_m2(const QuadraticData& d);

// Atoms and densities from the column relations of the flat M(2): the
// measure is supported on the algebraic variety of the extension.
AtomicMeasure2 measure_from_flat(const QuadraticData& d, const MomentMat& m2);

// Completion for m = 2 when M(Ω₁) is singular: the missing degree-4 moments
// are forced by the range condition Ran B ⊆ Ran A and the flat block
// C = WᵀAW, which must come out Hankel. Cross-checks the closed-form weight
// identities whenever their denominators are nonzero.
CompletionResult singular_m2(const WeightFamily2& w, int depth = 6);

// Affine expression c0 + cx5·γ(x⁵) + cy5·γ(y⁵) in the two undetermined pure
// degree-5 moments.
struct AffineForm {
    Rat c0, cx5, cy5;

    bool is_constant() const { return cx5.is_zero() && cy5.is_zero(); }
    friend bool operator==(const AffineForm& a, const AffineForm& b) {
        return a.c0 == b.c0 && a.cx5 == b.cx5 && a.cy5 == b.cy5;
    }
    std::string str() const;
};

enum class ObstructionStatus { obstructed, flat_feasible, unsupported };

// Flat-extension obstruction test for degree-4 data whose M(2) has exactly
// one column relation (X−h)(Y−k) = 0 and an invertible compression to
// {1, X, Y, X², Y²}: recursiveness pins the degree-5/6 moments, the
// compression determines the X³ column, and every fully determined row of
// the candidate M(3) must satisfy the same combination.
struct ObstructionReport {
    ObstructionStatus status = ObstructionStatus::unsupported;
    std::string unsupported_reason;
    int rank_m2 = 0;
    Rat h, k;                              // relation (X−h)(Y−k)
    std::optional<PolyRelation> relation;
    std::map<std::pair<int, int>, AffineForm> propagated;  // (i,j) → γ_{ij}
    std::map<std::string, AffineForm> coefficients;        // A1, AX, AY, AX2, AY2
    std::optional<std::pair<Rat, Rat>> witness;            // (combination, entry)
};

ObstructionReport flat_obstruction_check(const MomentSeq2& seq);

// Exact interpolation of the full input triangle plus support in the closed
// quadrant with at least one atom in the open quadrant.
bool verify_completion(const WeightFamily2& w, const AtomicMeasure2& mu);

} // namespace scpkit

#endif // SCPKIT_SCP2D_HPP
