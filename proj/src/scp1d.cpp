#include "scpkit/scp1d.hpp"

#include "scpkit/errors.hpp"

namespace scpkit {

std::vector<Rat> weight_moments1(const WeightSeq1& w) {
    std::vector<Rat> g{Rat::one()};
    g.reserve(w.alpha_sq.size() + 1);
    for (const Rat& a : w.alpha_sq) {
        if (a.sign() <= 0) throw ValidationError("weight_moments1: nonpositive squared weight");
        g.push_back(g.back() * a);
    }
    return g;
}

SCCVerdict scc_check(const WeightSeq1& w) {
    if (w.alpha_sq.empty()) throw ShapeError("scc_check: empty weight sequence");
    const int m = static_cast<int>(w.alpha_sq.size()) - 1;
    const auto g = weight_moments1(w);  // γ₀..γ_{m+1}
    SCCVerdict v;
    v.m = m;
    v.k = (m + 1) / 2;
    v.ell = m / 2 + 1;
    v.hk = Mat(static_cast<size_t>(v.k) + 1, static_cast<size_t>(v.k) + 1);
    for (int i = 0; i <= v.k; ++i)
        for (int j = 0; j <= v.k; ++j) v.hk(static_cast<size_t>(i), static_cast<size_t>(j)) = g[static_cast<size_t>(i + j)];
    v.hx = Mat(static_cast<size_t>(v.ell), static_cast<size_t>(v.ell));
    for (int i = 0; i < v.ell; ++i)
        for (int j = 0; j < v.ell; ++j) v.hx(static_cast<size_t>(i), static_cast<size_t>(j)) = g[static_cast<size_t>(i + j + 1)];
    v.psd_hk = is_psd(v.hk);
    v.psd_hx = is_psd(v.hx);
    // Parity-appropriate tail condition: v(k+1, k) ∈ Ran H(k) for even m,
    // v(ℓ+1, ℓ−1) ∈ Ran H_x(ℓ−1) for odd m.
    const auto in_range = [](const Mat& h, const std::vector<Rat>& tail) {
        Mat b(tail.size(), 1);
        for (size_t i = 0; i < tail.size(); ++i) b(i, 0) = tail[i];
        try {
            solve_in_range(h, b);
            return true;
        } catch (const RangeError&) {
            return false;
        }
    };
    if (m % 2 == 0) {
        std::vector<Rat> tail;
        for (int i = v.k + 1; i <= 2 * v.k + 1; ++i) tail.push_back(g[static_cast<size_t>(i)]);
        v.range_ok = in_range(v.hk, tail);
    } else {
        std::vector<Rat> tail;
        for (int i = v.ell + 1; i <= 2 * v.ell; ++i) tail.push_back(g[static_cast<size_t>(i)]);
        v.range_ok = in_range(v.hx, tail);
    }
    v.admits_completion = v.psd_hk && v.psd_hx && v.range_ok;
    return v;
}

namespace {

AtomicMeasure1 point_mass(const Rat& t) {
    AtomicMeasure1 mu;
    mu.atoms = {QuadExt(t)};
    mu.densities = {QuadExt(Rat::one())};
    return mu;
}

// (1 − a/b)δ₀ + (a/b)δ_b for squared weights a ≤ b, degenerating to δ_a.
AtomicMeasure1 two_atom(const Rat& a, const Rat& b) {
    if (a == b) return point_mass(a);
    AtomicMeasure1 mu;
    mu.atoms = {QuadExt(Rat::zero()), QuadExt(b)};
    mu.densities = {QuadExt(Rat::one() - a / b), QuadExt(a / b)};
    mu.validate();
    return mu;
}

} // namespace

AtomicMeasure1 scc_complete(const WeightSeq1& w) {
    const int m = static_cast<int>(w.alpha_sq.size()) - 1;
    if (m > 2) throw UnsupportedDegreeError("scc_complete: only m <= 2 is supported");
    const SCCVerdict v = scc_check(w);
    if (!v.admits_completion) throw NoCompletionError("scc_complete: criterion fails");
    const auto& a = w.alpha_sq;
    if (m == 0) return point_mass(a[0]);
    if (m == 1) return two_atom(a[0], a[1]);
    // m = 2: dispose of equal adjacent weights, then the strictly
    // increasing case is the abc shift.
    if (a[0] == a[1]) return point_mass(a[0]);  // criterion forces a[2] = a[0] too
    if (a[1] == a[2]) return two_atom(a[0], a[1]);
    return abc_measure(a[0], a[1], a[2]).second;
}

} // namespace scpkit
