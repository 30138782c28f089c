#include "scpkit/moments.hpp"

#include <algorithm>

#include "scpkit/errors.hpp"

namespace scpkit {

std::string Monomial::str() const {
    if (ydeg == 0 && xdeg == 0) return "1";
    std::string s;
    if (ydeg > 0) s += ydeg == 1 ? "Y" : "Y^" + std::to_string(ydeg);
    if (xdeg > 0) s += xdeg == 1 ? "X" : "X^" + std::to_string(xdeg);
    return s;
}

std::vector<Monomial> monomial_basis(int n) {
    if (n < 0) throw ShapeError("monomial_basis: negative degree");
    std::vector<Monomial> b;
    b.reserve(static_cast<size_t>((n + 1) * (n + 2) / 2));
    for (int d = 0; d <= n; ++d)
        for (int i = 0; i <= d; ++i) b.push_back({i, d - i});
    return b;
}

Poly2 Poly2::monomial(const Monomial& m, const Rat& c) {
    Poly2 p;
    p.add_term(m, c);
    return p;
}

Poly2 Poly2::x_plus(const Rat& h) {
    Poly2 p;
    p.add_term({0, 1}, Rat::one());
    p.add_term({0, 0}, h);
    return p;
}

Poly2 Poly2::y_plus(const Rat& k) {
    Poly2 p;
    p.add_term({1, 0}, Rat::one());
    p.add_term({0, 0}, k);
    return p;
}

void Poly2::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int Poly2::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.ydeg + mb.ydeg, ma.xdeg + mb.xdeg}, ca * cb);
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 acc(Rat::one());
    Poly2 base = *this;
    while (e != 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly2 Poly2::scaled(const Rat& c) const {
    Poly2 r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

MomentSeq2::MomentSeq2(int degree_bound, std::vector<Rat> values) : degree_(degree_bound), tab_(std::move(values)) {
    if (degree_ < 0) throw ShapeError("MomentSeq2: negative degree bound");
    const size_t expect = static_cast<size_t>((degree_ + 1) * (degree_ + 2) / 2);
    if (tab_.size() != expect)
        throw ShapeError("MomentSeq2: expected " + std::to_string(expect) + " entries, got " +
                         std::to_string(tab_.size()));
    if (tab_[0].sign() <= 0) throw ShapeError("MomentSeq2: gamma_00 must be positive");
}

MomentSeq2 MomentSeq2::zeros(int degree_bound) {
    if (degree_bound < 0) throw ShapeError("MomentSeq2: negative degree bound");
    std::vector<Rat> v(static_cast<size_t>((degree_bound + 1) * (degree_bound + 2) / 2));
    v[0] = Rat::one();
    return MomentSeq2(degree_bound, std::move(v));
}

size_t MomentSeq2::index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_)
        throw DegreeError("MomentSeq2: index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside degree bound " + std::to_string(degree_));
    const int d = i + j;
    return static_cast<size_t>(d * (d + 1) / 2 + i);
}

const Rat& MomentSeq2::at(int i, int j) const { return tab_[index(i, j)]; }

void MomentSeq2::set(int i, int j, const Rat& v) { tab_[index(i, j)] = v; }

namespace {

MomentMat build_labeled(const MomentSeq2& seq, int n, MatKind kind, std::pair<int, int> shift) {
    const int need = shift.first + shift.second + 2 * n;
    if (seq.degree_bound() < need)
        throw DegreeError("moment matrix: needs degree bound " + std::to_string(need) + ", have " +
                          std::to_string(seq.degree_bound()));
    MomentMat mm;
    mm.n = n;
    mm.kind = kind;
    mm.shift = shift;
    mm.basis = monomial_basis(n);
    const size_t sz = mm.basis.size();
    mm.mat = Mat(sz, sz);
    for (size_t p = 0; p < sz; ++p)
        for (size_t q = 0; q < sz; ++q)
            mm.mat(p, q) = seq.at(mm.basis[p].ydeg + mm.basis[q].ydeg + shift.first,
                                  mm.basis[p].xdeg + mm.basis[q].xdeg + shift.second);
    return mm;
}

} // namespace

MomentMat moment_matrix(const MomentSeq2& seq, int n) {
    return build_labeled(seq, n, MatKind::moment, {0, 0});
}

MomentMat localizing_matrix(const MomentSeq2& seq, int n, Axis axis) {
    if (axis == Axis::x) return build_labeled(seq, n, MatKind::localizing_x, {0, 1});
    return build_labeled(seq, n, MatKind::localizing_y, {1, 0});
}

MomentMat hyponormality_matrix(const MomentSeq2& seq, std::pair<int, int> u, int ell) {
    if (u.first < 0 || u.second < 0) throw ShapeError("hyponormality_matrix: negative shift");
    return build_labeled(seq, ell, MatKind::hyponormality, u);
}

Rat riesz_eval(const MomentSeq2& seq, const Poly2& poly) {
    Rat acc;
    for (const auto& [m, c] : poly.terms()) acc += c * seq.at(m.ydeg, m.xdeg);
    return acc;
}

MomentSeq2 translate(const MomentSeq2& seq, const Rat& h, const Rat& k) {
    MomentSeq2 out = MomentSeq2::zeros(seq.degree_bound());
    for (int d = 0; d <= seq.degree_bound(); ++d)
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            const Poly2 p = Poly2::y_plus(k).pow(static_cast<unsigned>(i)) *
                            Poly2::x_plus(h).pow(static_cast<unsigned>(j));
            out.set(i, j, riesz_eval(seq, p));
        }
    return out;
}

Poly2 PolyRelation::poly() const {
    Poly2 p;
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

Rat PolyRelation::coeff(const Monomial& m) const {
    for (const auto& [mm, c] : terms)
        if (mm == m) return c;
    return Rat::zero();
}

std::string PolyRelation::str() const {
    // Highest degree first, X before Y inside a degree: YX - 4·X - 3·Y + 12.
    auto sorted = terms;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
        return a.first.ydeg < b.first.ydeg;
    });
    std::string s;
    for (const auto& [m, c] : sorted) {
        const Rat a = c.abs();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = a == Rat::one() && m.total() > 0;
        if (!unit) s += a.str();
        if (m.total() > 0) s += (unit ? "" : "·") + m.str();
    }
    return s;
}

std::vector<PolyRelation> column_relations(const MomentMat& m) {
    if (m.kind != MatKind::moment) throw ShapeError("column_relations: not a moment matrix");
    std::vector<PolyRelation> rels;
    for (const auto& v : kernel_basis(m.mat)) {
        size_t lead = v.size();
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) lead = i;
        if (lead == v.size()) throw ConsistencyError("column_relations: zero kernel vector");
        PolyRelation rel;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) rel.terms.emplace_back(m.basis[i], v[i] / v[lead]);
        rels.push_back(std::move(rel));
    }
    return rels;
}

bool is_moment_matrix(const MomentMat& m) {
    std::map<std::pair<int, int>, Rat> seen;
    for (size_t p = 0; p < m.basis.size(); ++p)
        for (size_t q = 0; q < m.basis.size(); ++q) {
            const std::pair<int, int> key{m.basis[p].ydeg + m.basis[q].ydeg,
                                          m.basis[p].xdeg + m.basis[q].xdeg};
            auto [it, inserted] = seen.emplace(key, m.mat(p, q));
            if (!inserted && it->second != m.mat(p, q)) return false;
        }
    return true;
}

} // namespace scpkit
