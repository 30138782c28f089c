#ifndef SCPKIT_SHIFTS_HPP
#define SCPKIT_SHIFTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "scpkit/moments.hpp"
#include "scpkit/quadext.hpp"
#include "scpkit/rational.hpp"

namespace scpkit {

// Lattice index of a weight, k = (k1, k2) with k1 counting x-steps. The
// moment-table convention γ_{i,j} (i = y-degree) corresponds to k = (j, i);
// the conversion lives in this module only.
using ShiftIndex = std::pair<int, int>;

// Squared weight family of a 2-variable shift: α²_k and β²_k for |k| ≤ m,
// all positive.
class WeightFamily2 {
public:
    WeightFamily2(int m, std::map<ShiftIndex, Rat> alpha_sq, std::map<ShiftIndex, Rat> beta_sq);

    int m() const { return m_; }
    const Rat& alpha_sq(int k1, int k2) const;
    const Rat& beta_sq(int k1, int k2) const;
    const std::map<ShiftIndex, Rat>& alpha_table() const { return alpha_; }
    const std::map<ShiftIndex, Rat>& beta_table() const { return beta_; }

    // x ↔ y involution: α'_k = β_(k2,k1), β'_k = α_(k2,k1).
    WeightFamily2 swapped() const;

private:
    int m_;
    std::map<ShiftIndex, Rat> alpha_;
    std::map<ShiftIndex, Rat> beta_;
};

// Finitely atomic probability measure on the plane. Irrational coordinates
// and densities live in a shared quadratic extension; conjugate atoms appear
// with conjugate densities so that every moment is rational.
struct AtomicMeasure2 {
    std::vector<std::pair<QuadExt, QuadExt>> atoms;  // (x, y)
    std::vector<QuadExt> densities;

    size_t size() const { return atoms.size(); }
    // Checks distinctness, positive densities summing to 1, conjugate closure.
    void validate() const;
    AtomicMeasure2 swapped() const;
};

// One-variable analogue.
struct AtomicMeasure1 {
    std::vector<QuadExt> atoms;
    std::vector<QuadExt> densities;

    size_t size() const { return atoms.size(); }
    void validate() const;
};

// Initial squared weights α₀², …, α_m² of a 1-variable shift.
struct WeightSeq1 {
    std::vector<Rat> alpha_sq;
};

// Moments under the 2-step recursion γ_{n+2} = φ₀γ_n + φ₁γ_{n+1}.
struct RecursiveMeasure1 {
    Rat phi0;
    Rat phi1;
    Rat gamma0;
    Rat gamma1;

    bool positive_through(int n) const;
};

// Squared commutativity β²_{k+ε₁}·α²_k = α²_{k+ε₂}·β²_k at every k in range.
bool check_commutative(const WeightFamily2& w);

// Moments up to total degree m+1, along x-steps-then-y-steps; the reverse
// path is recomputed and must agree. Throws ValidationError on
// non-commutative input.
MomentSeq2 moments_from_weights(const WeightFamily2& w);

// α²_k = Γ_{k+ε₁}/Γ_k, β²_k = Γ_{k+ε₂}/Γ_k for |k| ≤ depth. Throws
// PositivityError when a required moment vanishes.
WeightFamily2 weights_from_measure(const AtomicMeasure2& mu, int depth);

// γ_{ij} = Σ density·yⁱxʲ, exact; every entry must come out rational.
MomentSeq2 moments_of_measure(const AtomicMeasure2& mu, int degree);

// Power moments Σ density·tᵏ of a 1-variable measure, k = 0..degree.
std::vector<Rat> moments_of_measure1(const AtomicMeasure1& mu, int degree);

// Marginals (μ^X, μ^Y): atoms collapsed per coordinate, densities summed.
std::pair<AtomicMeasure1, AtomicMeasure1> marginals(const AtomicMeasure2& mu);

// Berger measure of the restriction dropping the first h basis vectors:
// densities rescaled by tʰ/γ_h. Throws PositivityError when γ_h = 0.
AtomicMeasure1 restricted_measure(const AtomicMeasure1& xi, int h);

// The 2-atomic shift interpolating squared weights 0 < a < b < c: solves the
// recursion coefficients from γ₀..γ₃ and splits the generating function
// g(t) = t² − φ₁t − φ₀ into its two roots. Throws OrderError unless a < b < c.
std::pair<RecursiveMeasure1, AtomicMeasure1> abc_measure(const Rat& a, const Rat& b, const Rat& c);

// [γ₀, …, γ_n] under the 2-step recursion.
std::vector<Rat> recursive_moments(const RecursiveMeasure1& r, int n);

} // namespace scpkit

#endif // SCPKIT_SHIFTS_HPP
