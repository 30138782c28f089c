#include "scpkit/shifts.hpp"

#include <algorithm>
#include <string>

#include "scpkit/errors.hpp"

namespace scpkit {

namespace {

std::string idx_str(int k1, int k2) {
    return "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
}

} // namespace

WeightFamily2::WeightFamily2(int m, std::map<ShiftIndex, Rat> alpha_sq, std::map<ShiftIndex, Rat> beta_sq)
    : m_(m), alpha_(std::move(alpha_sq)), beta_(std::move(beta_sq)) {
    if (m_ < 0) throw ShapeError("WeightFamily2: negative m");
    for (int k1 = 0; k1 <= m_; ++k1)
        for (int k2 = 0; k1 + k2 <= m_; ++k2) {
            for (const auto* tab : {&alpha_, &beta_}) {
                auto it = tab->find({k1, k2});
                if (it == tab->end())
                    throw ShapeError("WeightFamily2: missing weight at " + idx_str(k1, k2));
                if (it->second.sign() <= 0)
                    throw ValidationError("WeightFamily2: nonpositive squared weight at " + idx_str(k1, k2));
            }
        }
}

const Rat& WeightFamily2::alpha_sq(int k1, int k2) const {
    auto it = alpha_.find({k1, k2});
    if (it == alpha_.end()) throw ShapeError("WeightFamily2: alpha index out of range " + idx_str(k1, k2));
    return it->second;
}

const Rat& WeightFamily2::beta_sq(int k1, int k2) const {
    auto it = beta_.find({k1, k2});
    if (it == beta_.end()) throw ShapeError("WeightFamily2: beta index out of range " + idx_str(k1, k2));
    return it->second;
}

WeightFamily2 WeightFamily2::swapped() const {
    std::map<ShiftIndex, Rat> a, b;
    for (const auto& [k, v] : alpha_) b[{k.second, k.first}] = v;
    for (const auto& [k, v] : beta_) a[{k.second, k.first}] = v;
    return WeightFamily2(m_, std::move(a), std::move(b));
}

void AtomicMeasure2::validate() const {
    if (atoms.size() != densities.size()) throw ShapeError("AtomicMeasure2: atom/density count mismatch");
    if (atoms.empty()) throw ShapeError("AtomicMeasure2: empty measure");
    QuadExt total;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (densities[i].sign() <= 0) throw ValidationError("AtomicMeasure2: nonpositive density");
        total += densities[i];
        for (size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i] == atoms[j]) throw ValidationError("AtomicMeasure2: duplicate atom");
    }
    if (!(total == QuadExt(Rat::one()))) throw ValidationError("AtomicMeasure2: densities do not sum to 1");
    // Conjugate closure: every irrational atom has its conjugate partner
    // carrying the conjugate density.
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].first.is_rational() && atoms[i].second.is_rational() && densities[i].is_rational())
            continue;
        const auto cx = atoms[i].first.conjugate();
        const auto cy = atoms[i].second.conjugate();
        bool found = false;
        for (size_t j = 0; j < atoms.size() && !found; ++j)
            found = atoms[j].first == cx && atoms[j].second == cy &&
                    densities[j] == densities[i].conjugate();
        if (!found) throw ValidationError("AtomicMeasure2: conjugate atom missing");
    }
}

AtomicMeasure2 AtomicMeasure2::swapped() const {
    AtomicMeasure2 s;
    s.densities = densities;
    s.atoms.reserve(atoms.size());
    for (const auto& [x, y] : atoms) s.atoms.emplace_back(y, x);
    return s;
}

void AtomicMeasure1::validate() const {
    if (atoms.size() != densities.size()) throw ShapeError("AtomicMeasure1: atom/density count mismatch");
    if (atoms.empty()) throw ShapeError("AtomicMeasure1: empty measure");
    QuadExt total;
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (densities[i].sign() <= 0) throw ValidationError("AtomicMeasure1: nonpositive density");
        total += densities[i];
        for (size_t j = i + 1; j < atoms.size(); ++j)
            if (atoms[i] == atoms[j]) throw ValidationError("AtomicMeasure1: duplicate atom");
    }
    if (!(total == QuadExt(Rat::one()))) throw ValidationError("AtomicMeasure1: densities do not sum to 1");
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].is_rational() && densities[i].is_rational()) continue;
        bool found = false;
        for (size_t j = 0; j < atoms.size() && !found; ++j)
            found = atoms[j] == atoms[i].conjugate() && densities[j] == densities[i].conjugate();
        if (!found) throw ValidationError("AtomicMeasure1: conjugate atom missing");
    }
}

bool RecursiveMeasure1::positive_through(int n) const {
    for (const Rat& g : recursive_moments(*this, n))
        if (g.sign() <= 0) return false;
    return true;
}

bool check_commutative(const WeightFamily2& w) {
    for (int k1 = 0; k1 <= w.m() - 1; ++k1)
        for (int k2 = 0; k1 + k2 <= w.m() - 1; ++k2) {
            // β²_{k+ε₁}·α²_k = α²_{k+ε₂}·β²_k
            if (w.beta_sq(k1 + 1, k2) * w.alpha_sq(k1, k2) != w.alpha_sq(k1, k2 + 1) * w.beta_sq(k1, k2))
                return false;
        }
    return true;
}

MomentSeq2 moments_from_weights(const WeightFamily2& w) {
    if (!check_commutative(w)) throw ValidationError("moments_from_weights: weight family is not commutative");
    const int deg = w.m() + 1;
    MomentSeq2 out = MomentSeq2::zeros(deg);
    for (int k1 = 0; k1 <= deg; ++k1)
        for (int k2 = 0; k1 + k2 <= deg; ++k2) {
            // x-steps first, then y-steps.
            Rat g = Rat::one();
            for (int t = 0; t < k1; ++t) g *= w.alpha_sq(t, 0);
            for (int t = 0; t < k2; ++t) g *= w.beta_sq(k1, t);
            // Second route, y-steps first; commutativity makes them agree.
            Rat g2 = Rat::one();
            for (int t = 0; t < k2; ++t) g2 *= w.beta_sq(0, t);
            for (int t = 0; t < k1; ++t) g2 *= w.alpha_sq(t, k2);
            if (g != g2) throw ConsistencyError("moments_from_weights: path dependence at " + idx_str(k1, k2));
            out.set(k2, k1, g);
        }
    return out;
}

WeightFamily2 weights_from_measure(const AtomicMeasure2& mu, int depth) {
    const MomentSeq2 seq = moments_of_measure(mu, depth + 1);
    const auto gamma = [&](int k1, int k2) -> const Rat& { return seq.at(k2, k1); };
    std::map<ShiftIndex, Rat> a, b;
    for (int k1 = 0; k1 <= depth; ++k1)
        for (int k2 = 0; k1 + k2 <= depth; ++k2) {
            const Rat& base = gamma(k1, k2);
            const Rat& gx = gamma(k1 + 1, k2);
            const Rat& gy = gamma(k1, k2 + 1);
            if (base.is_zero() || gx.is_zero() || gy.is_zero())
                throw PositivityError("weights_from_measure: vanishing moment at " + idx_str(k1, k2));
            a[{k1, k2}] = gx / base;
            b[{k1, k2}] = gy / base;
        }
    WeightFamily2 w(depth, std::move(a), std::move(b));
    if (!check_commutative(w))
        throw ConsistencyError("weights_from_measure: produced a non-commutative family");
    return w;
}

MomentSeq2 moments_of_measure(const AtomicMeasure2& mu, int degree) {
    MomentSeq2 out = MomentSeq2::zeros(degree);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) {
            QuadExt acc;
            for (size_t t = 0; t < mu.atoms.size(); ++t)
                acc += mu.densities[t] * mu.atoms[t].second.pow(static_cast<unsigned>(i)) *
                       mu.atoms[t].first.pow(static_cast<unsigned>(j));
            out.set(i, j, acc.to_rat());
        }
    return out;
}

std::vector<Rat> moments_of_measure1(const AtomicMeasure1& mu, int degree) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) {
        QuadExt acc;
        for (size_t t = 0; t < mu.atoms.size(); ++t)
            acc += mu.densities[t] * mu.atoms[t].pow(static_cast<unsigned>(k));
        out.push_back(acc.to_rat());
    }
    return out;
}

namespace {

AtomicMeasure1 collapse(const std::vector<QuadExt>& coords, const std::vector<QuadExt>& densities) {
    AtomicMeasure1 m;
    for (size_t i = 0; i < coords.size(); ++i) {
        size_t at = m.atoms.size();
        for (size_t j = 0; j < m.atoms.size(); ++j)
            if (m.atoms[j] == coords[i]) {
                at = j;
                break;
            }
        if (at == m.atoms.size()) {
            m.atoms.push_back(coords[i]);
            m.densities.push_back(densities[i]);
        } else {
            m.densities[at] += densities[i];
        }
    }
    // Ascending atoms; exact comparison.
    std::vector<size_t> order(m.atoms.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return m.atoms[i] < m.atoms[j]; });
    AtomicMeasure1 s;
    for (size_t i : order) {
        s.atoms.push_back(m.atoms[i]);
        s.densities.push_back(m.densities[i]);
    }
    return s;
}

} // namespace

std::pair<AtomicMeasure1, AtomicMeasure1> marginals(const AtomicMeasure2& mu) {
    std::vector<QuadExt> xs, ys;
    xs.reserve(mu.atoms.size());
    ys.reserve(mu.atoms.size());
    for (const auto& [x, y] : mu.atoms) {
        xs.push_back(x);
        ys.push_back(y);
    }
    return {collapse(xs, mu.densities), collapse(ys, mu.densities)};
}

AtomicMeasure1 restricted_measure(const AtomicMeasure1& xi, int h) {
    if (h < 0) throw ShapeError("restricted_measure: negative h");
    if (h == 0) return xi;
    QuadExt gamma_h;
    for (size_t i = 0; i < xi.atoms.size(); ++i)
        gamma_h += xi.densities[i] * xi.atoms[i].pow(static_cast<unsigned>(h));
    if (gamma_h.is_zero()) throw PositivityError("restricted_measure: gamma_h vanishes");
    AtomicMeasure1 out;
    for (size_t i = 0; i < xi.atoms.size(); ++i) {
        const QuadExt d = xi.densities[i] * xi.atoms[i].pow(static_cast<unsigned>(h)) / gamma_h;
        if (d.is_zero()) continue;  // atoms at 0 drop out
        out.atoms.push_back(xi.atoms[i]);
        out.densities.push_back(d);
    }
    return out;
}

std::pair<RecursiveMeasure1, AtomicMeasure1> abc_measure(const Rat& a, const Rat& b, const Rat& c) {
    if (!(Rat::zero() < a && a < b && b < c))
        throw OrderError("abc_measure: requires 0 < a < b < c");
    // γ₀..γ₃ = 1, a, ab, abc; fit γ₂ = φ₀γ₀ + φ₁γ₁ and γ₃ = φ₀γ₁ + φ₁γ₂.
    const Rat phi1 = b * (c - a) / (b - a);
    const Rat phi0 = -a * b * (c - b) / (b - a);
    RecursiveMeasure1 rec{phi0, phi1, Rat::one(), a};
    const Rat disc = phi1 * phi1 + Rat(4) * phi0;
    if (disc.sign() <= 0) throw ConsistencyError("abc_measure: generating function lacks two real zeros");
    const QuadExt root = QuadExt::sqrt(disc);
    const QuadExt half(Rat(1, 2));
    const QuadExt t0 = half * (QuadExt(phi1) - root);
    const QuadExt t1 = half * (QuadExt(phi1) + root);
    // Densities from γ₀ = 1 and γ₁ = a.
    const QuadExt rho1 = (QuadExt(a) - t0) / (t1 - t0);
    const QuadExt rho0 = (t1 - QuadExt(a)) / (t1 - t0);
    if (t0.sign() < 0 || rho0.sign() <= 0 || rho1.sign() <= 0)
        throw ConsistencyError("abc_measure: interpolant is not a positive measure");
    AtomicMeasure1 mu;
    mu.atoms = {t0, t1};
    mu.densities = {rho0, rho1};
    mu.validate();
    // The recursion must reproduce the prescribed start exactly.
    const auto gs = recursive_moments(rec, 3);
    if (gs[2] != a * b || gs[3] != a * b * c)
        throw ConsistencyError("abc_measure: recursion does not interpolate the data");
    return {rec, mu};
}

std::vector<Rat> recursive_moments(const RecursiveMeasure1& r, int n) {
    if (n < 0) throw ShapeError("recursive_moments: negative length");
    std::vector<Rat> g;
    g.reserve(static_cast<size_t>(n) + 1);
    g.push_back(r.gamma0);
    if (n >= 1) g.push_back(r.gamma1);
    for (int i = 2; i <= n; ++i) g.push_back(r.phi0 * g[i - 2] + r.phi1 * g[i - 1]);
    return g;
}

} // namespace scpkit
