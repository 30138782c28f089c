#include "scpkit/scp2d.hpp"

#include <algorithm>
#include <array>

#include "scpkit/errors.hpp"

namespace scpkit {

QuadraticData::QuadraticData(Rat a_, Rat b_, Rat c_, Rat d_, Rat e_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)) {
    for (const Rat* v : {&a, &b, &c, &d, &e})
        if (v->sign() <= 0) throw ValidationError("QuadraticData: weights must be positive");
}

MomentSeq2 QuadraticData::moments() const {
    MomentSeq2 seq = MomentSeq2::zeros(2);
    seq.set(0, 1, a);
    seq.set(1, 0, b);
    seq.set(0, 2, a * c);
    seq.set(1, 1, b * e);
    seq.set(2, 0, b * d);
    return seq;
}

MomentMat QuadraticData::m1() const { return moment_matrix(moments(), 1); }

WeightFamily2 QuadraticData::family() const {
    std::map<ShiftIndex, Rat> al{{{0, 0}, a}, {{1, 0}, c}, {{0, 1}, e}};
    std::map<ShiftIndex, Rat> be{{{0, 0}, b}, {{0, 1}, d}, {{1, 0}, f()}};
    return WeightFamily2(1, std::move(al), std::move(be));
}

std::string case_name(CompletionCase c, bool swapped) {
    std::string s;
    switch (c) {
        case CompletionCase::rank1: s = "rank1"; break;
        case CompletionCase::a_eq_c: s = "a_eq_c"; break;
        case CompletionCase::rank2: s = "rank2"; break;
        case CompletionCase::rank3_e_eq_c: s = "rank3_e_eq_c"; break;
        case CompletionCase::rank3_e_lt_c: s = "rank3_e_lt_c"; break;
    }
    if (swapped) s += "_swapped";
    return s;
}

namespace {

AtomicMeasure2 rational_measure(std::vector<std::pair<Rat, Rat>> atoms, std::vector<Rat> densities) {
    AtomicMeasure2 mu;
    for (auto& [x, y] : atoms) mu.atoms.emplace_back(QuadExt(x), QuadExt(y));
    for (auto& r : densities) mu.densities.emplace_back(QuadExt(r));
    return mu;
}

MomentMat assemble_flat(const Mat& a, const Mat& b, const Mat& c) {
    MomentMat mm;
    mm.n = 2;
    mm.kind = MatKind::moment;
    mm.basis = monomial_basis(2);
    mm.mat = Mat(6, 6);
    mm.mat.set_block(0, 0, a);
    mm.mat.set_block(0, 3, b);
    mm.mat.set_block(3, 0, b.transpose());
    mm.mat.set_block(3, 3, c);
    return mm;
}

size_t count_axis_atoms(const AtomicMeasure2& mu, bool x_axis) {
    size_t n = 0;
    for (const auto& [x, y] : mu.atoms)
        if ((x_axis ? x : y).is_zero()) ++n;
    return n;
}

} // namespace

FlatM2 build_flat_m2(const QuadraticData& d) {
    const Rat f = d.f();
    const MomentMat m1 = d.m1();
    if (!is_psd(m1.mat)) throw NoCompletionError("build_flat_m2: M(1) is not PSD");
    if (d.a == d.c) throw ShapeError("build_flat_m2: a = c is handled upstream");
    if (d.c < d.e) throw ShapeError("build_flat_m2: requires c >= e (swap upstream)");
    FlatM2 out;
    out.p = d.c;
    out.q = d.c;
    if (d.e == d.c) {
        out.r = d.c;
        out.s = d.d;
    } else {
        out.r = d.e * f / d.d;
        // The unique root of det M_y(2)(s) = 0; also guarantees s ≥ d.
        out.s = (d.a * d.a * d.c * d.d * d.d - Rat(2) * d.a * d.b * d.d * d.e * d.e +
                 d.b * d.b * d.e * d.e * d.e) /
                (d.a * d.a * d.d * (d.c - d.e));
    }
    const Rat ac = d.a * d.c, be = d.b * d.e, bd = d.b * d.d;
    const Mat b{{ac, be, bd},
                {ac * out.p, be * out.q, bd * out.r},
                {be * out.q, bd * out.r, bd * out.s}};
    Mat c;
    try {
        c = flat_complete(m1.mat, b);
    } catch (const RangeError&) {
        throw ConsistencyError("build_flat_m2: B escapes the range of M(1)");
    }
    out.m2 = assemble_flat(m1.mat, b, c);
    if (!is_moment_matrix(out.m2)) throw ConsistencyError("build_flat_m2: extension is not a moment matrix");
    if (!is_psd(out.m2.mat)) throw ConsistencyError("build_flat_m2: extension is not PSD");
    if (rank(out.m2.mat) != rank(m1.mat)) throw ConsistencyError("build_flat_m2: extension is not flat");
    return out;
}

AtomicMeasure2 measure_from_flat(const QuadraticData& d, const MomentMat& m2) {
    const Rat f = d.f();
    const size_t rk = rank(m2.mat);
    AtomicMeasure2 mu;
    if (rk == 1) {
        mu = rational_measure({{d.a, d.b}}, {Rat::one()});
    } else if (rk == 2) {
        if (d.a == d.c) throw ShapeError("measure_from_flat: a = c is handled upstream");
        const Rat y0 = d.b * (d.c - d.e) / (d.c - d.a);
        mu = rational_measure({{Rat::zero(), y0}, {d.c, f}}, {Rat::one() - d.a / d.c, d.a / d.c});
    } else if (d.e == d.c) {
        // Relations X² = cX, YX = cY, Y² = dY; variety {(0,0),(c,0),(c,d)}.
        mu = rational_measure({{Rat::zero(), Rat::zero()}, {d.c, Rat::zero()}, {d.c, d.d}},
                              {Rat::one() - d.a / d.c, d.a / d.c - d.b / d.d, d.b / d.d});
    } else {
        // Relations X² = cX, YX = fX, Y² = (be(f−d)/(a(c−e)))X + zY;
        // variety {(0,0),(0,z),(c,f)}.
        const Rat z = (d.c * d.d - d.e * f) / (d.c - d.e);
        const Rat det_m1 = det(m2.mat.submatrix({0, 1, 2}, {0, 1, 2}));
        mu = rational_measure(
            {{Rat::zero(), Rat::zero()}, {Rat::zero(), z}, {d.c, f}},
            {det_m1 / (d.a * d.b * (d.c * d.d - d.e * f)),
             d.b * (d.c - d.e) * (d.c - d.e) / (d.c * (d.c * d.d - d.e * f)), d.a / d.c});
    }
    mu.validate();
    if (!(moments_of_measure(mu, 2) == d.moments()))
        throw ConsistencyError("measure_from_flat: measure fails to interpolate the data");
    return mu;
}

namespace {

// Shared tail of the 2-variable solvers: rebuild everything in the original
// orientation from the measure and run the verification battery.
CompletionResult finalize_completion(const QuadraticData& d, AtomicMeasure2 mu, CompletionCase tag,
                                     bool swapped, int depth) {
    mu.validate();
    CompletionResult res;
    res.case_tag = tag;
    res.swapped = swapped;
    res.measure = std::move(mu);
    const MomentSeq2 seq = moments_of_measure(res.measure, std::max(4, depth + 1));
    const MomentSeq2 data = d.moments();
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j)
            if (seq.at(i, j) != data.at(i, j))
                throw ConsistencyError("quadratic_scp: completion fails to interpolate the data");
    res.m2 = moment_matrix(seq, 2);
    res.mx = localizing_matrix(seq, 1, Axis::x);
    res.my = localizing_matrix(seq, 1, Axis::y);
    res.rank_m1 = static_cast<int>(rank(d.m1().mat));
    res.p = seq.at(0, 3) / seq.at(0, 2);
    res.q = seq.at(1, 2) / seq.at(1, 1);
    res.r = seq.at(2, 1) / seq.at(2, 0);
    res.s = seq.at(3, 0) / seq.at(2, 0);
    res.completion = weights_from_measure(res.measure, depth);

    if (!is_psd(res.m2.mat) || !is_psd(res.mx.mat) || !is_psd(res.my.mat))
        throw ConsistencyError("quadratic_scp: completed matrices are not PSD");
    if (rank(res.m2.mat) != static_cast<size_t>(res.rank_m1))
        throw ConsistencyError("quadratic_scp: M(2) is not a flat extension");
    if (!is_moment_matrix(res.m2)) throw ConsistencyError("quadratic_scp: M(2) is not a moment matrix");
    if (res.measure.size() != static_cast<size_t>(res.rank_m1))
        throw ConsistencyError("quadratic_scp: atom count differs from rank M(1)");
    // Atom bookkeeping against the localizing ranks.
    if (count_axis_atoms(res.measure, true) != static_cast<size_t>(res.rank_m1) - rank(res.mx.mat))
        throw ConsistencyError("quadratic_scp: x = 0 atom count mismatch");
    if (count_axis_atoms(res.measure, false) != static_cast<size_t>(res.rank_m1) - rank(res.my.mat))
        throw ConsistencyError("quadratic_scp: y = 0 atom count mismatch");
    if (!verify_completion(*res.completion, res.measure))
        throw ConsistencyError("quadratic_scp: completion verification failed");
    return res;
}

// Shared tail of singular_m2: all atoms must land in the closed quadrant,
// the measure must reproduce the full degree-3 input triangle, and the flat
// M(Ω₃) rebuilt from the measure must match the forced blocks.
CompletionResult finalize_singular(const WeightFamily2& w, const MomentSeq2& data, AtomicMeasure2 mu,
                                   CompletionCase tag, bool swapped, int depth) {
    mu.validate();
    for (const auto& [x, y] : mu.atoms)
        if (x.sign() < 0 || y.sign() < 0)
            throw NoCompletionError("singular_m2: an atom falls outside the closed quadrant");
    CompletionResult res;
    res.case_tag = tag;
    res.swapped = swapped;
    res.measure = std::move(mu);
    const MomentSeq2 seq = moments_of_measure(res.measure, std::max(4, depth + 1));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j)
            if (seq.at(i, j) != data.at(i, j))
                throw ConsistencyError("singular_m2: measure fails to interpolate the data");
    res.rank_m1 = static_cast<int>(rank(moment_matrix(data, 1).mat));
    res.m2 = moment_matrix(seq, 2);
    res.mx = localizing_matrix(seq, 1, Axis::x);
    res.my = localizing_matrix(seq, 1, Axis::y);
    res.p = w.alpha_sq(2, 0);
    res.q = w.alpha_sq(1, 1);
    res.r = w.alpha_sq(0, 2);
    res.s = w.beta_sq(0, 2);
    if (res.p != seq.at(0, 3) / seq.at(0, 2) || res.q != seq.at(1, 2) / seq.at(1, 1) ||
        res.r != seq.at(2, 1) / seq.at(2, 0) || res.s != seq.at(3, 0) / seq.at(2, 0))
        throw ConsistencyError("singular_m2: supplied degree-2 weights disagree with the measure");
    res.completion = weights_from_measure(res.measure, depth);
    if (!is_psd(res.m2.mat) || !is_psd(res.mx.mat) || !is_psd(res.my.mat))
        throw ConsistencyError("singular_m2: completed matrices are not PSD");
    if (rank(res.m2.mat) != static_cast<size_t>(res.rank_m1))
        throw ConsistencyError("singular_m2: M(Omega_3) is not a flat extension");
    if (!is_moment_matrix(res.m2)) throw ConsistencyError("singular_m2: M(Omega_3) is not a moment matrix");
    if (res.measure.size() != static_cast<size_t>(res.rank_m1))
        throw ConsistencyError("singular_m2: atom count differs from rank M(1)");
    if (count_axis_atoms(res.measure, true) != static_cast<size_t>(res.rank_m1) - rank(res.mx.mat))
        throw ConsistencyError("singular_m2: x = 0 atom count mismatch");
    if (count_axis_atoms(res.measure, false) != static_cast<size_t>(res.rank_m1) - rank(res.my.mat))
        throw ConsistencyError("singular_m2: y = 0 atom count mismatch");
    if (!verify_completion(w, res.measure))
        throw ConsistencyError("singular_m2: completion verification failed");
    return res;
}

} // namespace

CompletionResult quadratic_scp(const QuadraticData& d, int depth) {
    if (depth < 1) throw ShapeError("quadratic_scp: depth must be at least 1");
    const MomentMat m1 = d.m1();
    if (!is_psd(m1.mat)) throw NoCompletionError("quadratic_scp: M(1) is not PSD");
    const size_t rk = rank(m1.mat);
    const Rat f = d.f();

    if (rk == 1)
        return finalize_completion(d, rational_measure({{d.a, d.b}}, {Rat::one()}),
                                   CompletionCase::rank1, false, depth);

    if (d.a == d.c) {
        // Positivity forces e = a and f = b ≤ d; the x-marginal is a point mass.
        AtomicMeasure2 mu =
            d.b == d.d ? rational_measure({{d.a, d.b}}, {Rat::one()})
                       : rational_measure({{d.a, Rat::zero()}, {d.a, d.d}},
                                          {Rat::one() - d.b / d.d, d.b / d.d});
        return finalize_completion(d, std::move(mu), CompletionCase::a_eq_c, false, depth);
    }

    if (d.c < d.e) {
        // cd ≥ ef makes the swapped orientation in-scope: d > f there.
        CompletionResult inner = quadratic_scp(d.swapped(), depth);
        if (inner.swapped) throw ConsistencyError("quadratic_scp: nested swap");
        CompletionResult res =
            finalize_completion(d, inner.measure.swapped(), inner.case_tag, true, depth);
        res.z = inner.z;
        res.y0 = inner.y0;
        res.yc = inner.yc;
        return res;
    }

    const FlatM2 flat = build_flat_m2(d);
    AtomicMeasure2 mu = measure_from_flat(d, flat.m2);
    CompletionCase tag = rk == 2 ? CompletionCase::rank2
                                 : (d.e == d.c ? CompletionCase::rank3_e_eq_c
                                               : CompletionCase::rank3_e_lt_c);
    CompletionResult res = finalize_completion(d, std::move(mu), tag, false, depth);
    if (!(res.m2.mat == flat.m2.mat))
        throw ConsistencyError("quadratic_scp: measure moments disagree with the flat extension");
    if (res.p != flat.p || res.q != flat.q || res.r != flat.r || res.s != flat.s)
        throw ConsistencyError("quadratic_scp: new weights disagree with the flat extension");
    if (tag == CompletionCase::rank2) {
        res.y0 = d.b * (d.c - d.e) / (d.c - d.a);
        res.yc = f;
    } else if (tag == CompletionCase::rank3_e_lt_c) {
        res.z = (d.c * d.d - d.e * f) / (d.c - d.e);
    }
    return res;
}

CompletionResult singular_m2(const WeightFamily2& w, int depth) {
    if (w.m() != 2) throw ShapeError("singular_m2: needs a weight family of degree m = 2");
    const MomentSeq2 seq = moments_from_weights(w);  // degree 3
    const MomentMat a_mm = moment_matrix(seq, 1);
    const Mat& A = a_mm.mat;
    if (!det(A).is_zero()) throw NotSingularError("singular_m2: M(1) is invertible");
    if (!is_psd(A)) throw NoCompletionError("singular_m2: M(1) is not PSD");
    const size_t rk = rank(A);

    // Need columns 1 and X independent for the Y = y₀·1 + λ·X shape; if X is
    // a multiple of 1 instead, solve the swapped problem and swap back.
    if (rk == 2 && det(A.submatrix({0, 1}, {0, 1})).is_zero()) {
        CompletionResult inner = singular_m2(w.swapped(), depth);
        if (inner.swapped) throw ConsistencyError("singular_m2: nested swap");
        AtomicMeasure2 mu = inner.measure.swapped();
        CompletionResult res = finalize_singular(w, seq, std::move(mu), inner.case_tag, true, depth);
        return res;
    }

    const Mat B{{seq.at(0, 2), seq.at(1, 1), seq.at(2, 0)},
                {seq.at(0, 3), seq.at(1, 2), seq.at(2, 1)},
                {seq.at(1, 2), seq.at(2, 1), seq.at(3, 0)}};
    Mat W;
    try {
        W = solve_in_range(A, B);
    } catch (const RangeError&) {
        throw NoCompletionError("singular_m2: Ran B is not contained in Ran M(1)");
    }
    const Mat C = W.transpose() * (A * W);
    if (C(0, 2) != C(1, 1)) throw NoCompletionError("singular_m2: forced C block is not Hankel");

    // Closed-form consistency identities, checked when their denominators
    // are nonzero. With the range condition established they must hold.
    {
        const Rat a = w.alpha_sq(0, 0), b = w.beta_sq(0, 0), c = w.alpha_sq(1, 0),
                  e = w.alpha_sq(0, 1), dd = w.beta_sq(0, 1);
        const Rat p = w.alpha_sq(2, 0), q = w.alpha_sq(1, 1), r = w.alpha_sq(0, 2),
                  s = w.beta_sq(0, 2);
        if (a != c && dd * (a * (c - a)) != b * (a * c - Rat(2) * a * e + e * e))
            throw ConsistencyError("singular_m2: beta_01 identity fails");
        if (a != e) {
            if (p * (c * (a - e)) != a * c * c - a * c * e + a * e * q - c * e * q)
                throw ConsistencyError("singular_m2: alpha_20 identity fails");
            if (q * (e * (a - e)) != a * c * e - a * e * e - a * c * r + Rat(2) * a * e * r - e * e * r)
                throw ConsistencyError("singular_m2: alpha_11 identity fails");
            if (r * (b * (a - e)) != a * (b * c - b * e + a * s - c * s))
                throw ConsistencyError("singular_m2: alpha_02 identity fails");
        }
    }

    AtomicMeasure2 mu;
    if (rk == 1) {
        mu = rational_measure({{seq.at(0, 1), seq.at(1, 0)}}, {Rat::one()});
    } else {
        // X² = u·1 + v·X from the solved block; Y = y₀·1 + λ·X from ker M(1).
        if (!W(2, 0).is_zero()) throw ConsistencyError("singular_m2: unexpected pivot layout");
        const Rat u = W(0, 0), v = W(1, 0);
        const auto kern = kernel_basis(A);
        if (kern.size() != 1 || kern[0][2].is_zero())
            throw ConsistencyError("singular_m2: missing Y column relation");
        const Rat y0 = -kern[0][0] / kern[0][2];
        const Rat lambda = -kern[0][1] / kern[0][2];
        const Rat disc = v * v + Rat(4) * u;
        if (disc.sign() <= 0) throw ConsistencyError("singular_m2: X relation lacks two real zeros");
        const QuadExt root = QuadExt::sqrt(disc);
        const QuadExt half(Rat(1, 2));
        const QuadExt x0 = half * (QuadExt(v) - root);
        const QuadExt x1 = half * (QuadExt(v) + root);
        const QuadExt gx(seq.at(0, 1));
        const QuadExt rho1 = (gx - x0) / (x1 - x0);
        const QuadExt rho0 = (x1 - gx) / (x1 - x0);
        if (rho0.sign() <= 0 || rho1.sign() <= 0)
            throw ConsistencyError("singular_m2: densities are not positive");
        mu.atoms = {{x0, QuadExt(y0) + QuadExt(lambda) * x0}, {x1, QuadExt(y0) + QuadExt(lambda) * x1}};
        mu.densities = {rho0, rho1};
    }
    return finalize_singular(w, seq, std::move(mu), rk == 1 ? CompletionCase::rank1 : CompletionCase::rank2,
                             false, depth);
}

bool verify_completion(const WeightFamily2& w, const AtomicMeasure2& mu) {
    bool open_quadrant = false;
    for (const auto& [x, y] : mu.atoms) {
        if (x.sign() < 0 || y.sign() < 0) return false;
        if (x.sign() > 0 && y.sign() > 0) open_quadrant = true;
    }
    if (!open_quadrant) return false;
    try {
        return moments_of_measure(mu, w.m() + 1) == moments_from_weights(w);
    } catch (const ConsistencyError&) {
        return false;  // irrational moments can only mean a broken measure
    }
}

std::string AffineForm::str() const {
    std::string s = c0.str();
    for (const auto& [coef, name] : {std::pair<const Rat&, const char*>{cx5, "g05"},
                                     std::pair<const Rat&, const char*>{cy5, "g50"}}) {
        if (coef.is_zero()) continue;
        s += coef.sign() < 0 ? " - " : " + ";
        const Rat a = coef.abs();
        if (a != Rat::one()) s += a.str() + "·";
        s += name;
    }
    return s;
}

namespace {

// Sparse polynomial in the four undetermined tail moments
// (x⁵-, y⁵-, x⁶-, y⁶-type), exact rational coefficients.
struct ParamPoly {
    std::map<std::array<int, 4>, Rat> terms;

    static ParamPoly constant(const Rat& c) {
        ParamPoly p;
        p.add({0, 0, 0, 0}, c);
        return p;
    }
    static ParamPoly parameter(int idx) {
        ParamPoly p;
        std::array<int, 4> e{0, 0, 0, 0};
        e[static_cast<size_t>(idx)] = 1;
        p.add(e, Rat::one());
        return p;
    }

    void add(const std::array<int, 4>& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first == std::array<int, 4>{0, 0, 0, 0});
    }
    Rat constant_value() const {
        if (terms.empty()) return Rat::zero();
        return terms.begin()->second;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.terms) r.add(e, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [e, c] : b.terms) r.add(e, -c);
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::array<int, 4> e{};
                for (size_t i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        return r;
    }
};

ParamPoly lift(const AffineForm& f) {
    ParamPoly p = ParamPoly::constant(f.c0);
    p.add({1, 0, 0, 0}, f.cx5);
    p.add({0, 1, 0, 0}, f.cy5);
    return p;
}

AffineForm affine_of(const ParamPoly& p) {
    AffineForm f{Rat::zero(), Rat::zero(), Rat::zero()};
    for (const auto& [e, c] : p.terms) {
        if (e == std::array<int, 4>{0, 0, 0, 0})
            f.c0 = c;
        else if (e == std::array<int, 4>{1, 0, 0, 0})
            f.cx5 = c;
        else if (e == std::array<int, 4>{0, 1, 0, 0})
            f.cy5 = c;
        else
            throw ConsistencyError("flat_obstruction_check: entry is not affine in the free moments");
    }
    return f;
}

// Gaussian elimination with a parameter-affine right-hand side.
std::vector<AffineForm> solve_affine(Mat m, std::vector<AffineForm> rhs) {
    const size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) throw ConsistencyError("flat_obstruction_check: singular compression in solve");
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            std::swap(rhs[c], rhs[piv]);
        }
        const Rat d = m(c, c);
        for (size_t j = c; j < n; ++j) m(c, j) /= d;
        rhs[c] = {rhs[c].c0 / d, rhs[c].cx5 / d, rhs[c].cy5 / d};
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            const Rat fct = m(i, c);
            for (size_t j = c; j < n; ++j) m(i, j) -= fct * m(c, j);
            rhs[i] = {rhs[i].c0 - fct * rhs[c].c0, rhs[i].cx5 - fct * rhs[c].cx5,
                      rhs[i].cy5 - fct * rhs[c].cy5};
        }
    }
    return rhs;
}

} // namespace

ObstructionReport flat_obstruction_check(const MomentSeq2& seq) {
    ObstructionReport rep;
    const auto unsupported = [&rep](const std::string& why) {
        rep.status = ObstructionStatus::unsupported;
        rep.unsupported_reason = why;
        return rep;
    };
    if (seq.degree_bound() != 4) return unsupported("needs degree-4 data");
    const MomentMat m2 = moment_matrix(seq, 2);
    if (!is_psd(m2.mat)) return unsupported("M(2) is not PSD");
    const auto rels = column_relations(m2);
    if (rels.size() != 1) return unsupported("expected exactly one column relation, found " +
                                             std::to_string(rels.size()));
    const PolyRelation& rel = rels[0];
    // Shape (X−h)(Y−k): YX − kX − hY + hk with unit YX coefficient.
    for (const auto& [mono, coef] : rel.terms)
        if (!(mono == Monomial{0, 0} || mono == Monomial{0, 1} || mono == Monomial{1, 0} ||
              mono == Monomial{1, 1}))
            return unsupported("column relation is not of the form (X-h)(Y-k)");
    if (rel.coeff({1, 1}) != Rat::one()) return unsupported("column relation is not monic in YX");
    const Rat k = -rel.coeff({0, 1});
    const Rat h = -rel.coeff({1, 0});
    if (rel.coeff({0, 0}) != h * k) return unsupported("column relation is not of the form (X-h)(Y-k)");
    rep.h = h;
    rep.k = k;
    rep.relation = rel;
    rep.rank_m2 = static_cast<int>(rank(m2.mat));

    const std::vector<size_t> comp{0, 1, 2, 3, 5};  // rows/columns 1, X, Y, X², Y²
    const Mat mb = m2.mat.submatrix(comp, comp);
    if (det(mb).is_zero()) return unsupported("compression to {1,X,Y,X2,Y2} is singular");

    // Recursive propagation: γ_{ij} = k·γ_{i−1,j} + h·γ_{i,j−1} − hk·γ_{i−1,j−1}
    // for i, j ≥ 1 pins every degree-5/6 moment except the four pure ones.
    std::map<std::pair<int, int>, ParamPoly> g;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) g[{i, j}] = ParamPoly::constant(seq.at(i, j));
    g[{0, 5}] = ParamPoly::parameter(0);
    g[{5, 0}] = ParamPoly::parameter(1);
    g[{0, 6}] = ParamPoly::parameter(2);
    g[{6, 0}] = ParamPoly::parameter(3);
    const ParamPoly hk_p = ParamPoly::constant(h * k);
    const ParamPoly h_p = ParamPoly::constant(h);
    const ParamPoly k_p = ParamPoly::constant(k);
    for (int dg = 5; dg <= 6; ++dg)
        for (int i = 1; i < dg; ++i) {
            const int j = dg - i;
            g[{i, j}] = k_p * g[{i - 1, j}] + h_p * g[{i, j - 1}] - hk_p * g[{i - 1, j - 1}];
        }
    for (int dg = 5; dg <= 6; ++dg)
        for (int i = 1; i < dg; ++i) rep.propagated[{i, dg - i}] = affine_of(g[{i, dg - i}]);

    // Determine [X³] against the basis compression.
    std::vector<AffineForm> rhs;
    const auto basis2 = monomial_basis(2);
    for (size_t t : comp) {
        const Monomial& row = basis2[t];
        rhs.push_back(affine_of(g[{row.ydeg, row.xdeg + 3}]));
    }
    const auto coefs = solve_affine(mb, rhs);
    const std::array<const char*, 5> names{"A1", "AX", "AY", "AX2", "AY2"};
    for (size_t i = 0; i < 5; ++i) rep.coefficients[names[i]] = coefs[i];

    // Every fully determined row of the candidate M(3) must satisfy the same
    // combination; the first constant mismatch is a definitive obstruction.
    for (const Monomial& row : monomial_basis(3)) {
        ParamPoly combo;
        for (size_t i = 0; i < 5; ++i) {
            const Monomial& col = basis2[comp[i]];
            combo = combo + lift(coefs[i]) * g[{row.ydeg + col.ydeg, row.xdeg + col.xdeg}];
        }
        const ParamPoly target = g[{row.ydeg, row.xdeg + 3}];
        const ParamPoly diff = combo - target;
        if (diff.is_zero()) continue;
        // A parameter-dependent difference only constrains the free moments;
        // the decisive rows are the fully determined ones, where the free
        // coefficients have cancelled and the mismatch is a plain rational.
        if (!diff.is_constant()) continue;
        if (!combo.is_constant() || !target.is_constant())
            throw ConsistencyError("flat_obstruction_check: non-affine cancellation in the row scan");
        rep.status = ObstructionStatus::obstructed;
        rep.witness = std::make_pair(combo.constant_value(), target.constant_value());
        return rep;
    }
    rep.status = ObstructionStatus::flat_feasible;
    return rep;
}

} // namespace scpkit
