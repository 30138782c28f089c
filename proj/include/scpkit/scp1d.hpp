#ifndef SCPKIT_SCP1D_HPP
#define SCPKIT_SCP1D_HPP

#include "scpkit/matrix.hpp"
#include "scpkit/shifts.hpp"

namespace scpkit {

// Outcome of the one-variable completion criterion: H(k) ⪰ 0, H_x(ℓ−1) ⪰ 0,
// and the parity-appropriate tail vector lies in the matching range.
struct SCCVerdict {
    int m = 0;
    int k = 0;    // ⌊(m+1)/2⌋
    int ell = 0;  // ⌊m/2⌋ + 1
    Mat hk;       // H(k) = (γ_{i+j})
    Mat hx;       // H_x(ℓ−1) = (γ_{i+j+1})
    bool psd_hk = false;
    bool psd_hx = false;
    bool range_ok = false;
    bool admits_completion = false;
};

// Moments γ₀..γ_{m+1} generated by the squared weights.
std::vector<Rat> weight_moments1(const WeightSeq1& w);

SCCVerdict scc_check(const WeightSeq1& w);

// Explicit completion for m ≤ 2: δ_{α₀²} (m = 0), the two-atom canonical
// measure (m = 1), the abc measure (m = 2, strictly increasing). Equal
// adjacent weights reduce to the lower-degree case first. Throws
// NoCompletionError when the criterion fails, UnsupportedDegreeError for m ≥ 3.
AtomicMeasure1 scc_complete(const WeightSeq1& w);

} // namespace scpkit

#endif // SCPKIT_SCP1D_HPP
