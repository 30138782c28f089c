#ifndef SCPKIT_MOMENTS_HPP
#define SCPKIT_MOMENTS_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "scpkit/matrix.hpp"
#include "scpkit/rational.hpp"

namespace scpkit {

// y^ydeg · x^xdeg. Basis order is total degree first, then increasing
// y-degree, so the column labels read 1, X, Y, X², YX, Y², ...
struct Monomial {
    int ydeg = 0;
    int xdeg = 0;

    int total() const { return ydeg + xdeg; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ydeg == b.ydeg && a.xdeg == b.xdeg;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.ydeg < b.ydeg;
    }

    std::string str() const;
};

// All monomials of total degree ≤ n in basis order; (n+1)(n+2)/2 of them.
std::vector<Monomial> monomial_basis(int n);

// Sparse polynomial in x and y with rational coefficients.
class Poly2 {
public:
    Poly2() = default;
    explicit Poly2(const Rat& c) { add_term({0, 0}, c); }
    static Poly2 monomial(const Monomial& m, const Rat& c = Rat::one());
    // x + h and y + k, the degree-one translation factors.
    static Poly2 x_plus(const Rat& h);
    static Poly2 y_plus(const Rat& k);

    void add_term(const Monomial& m, const Rat& c);
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 pow(unsigned e) const;
    Poly2 scaled(const Rat& c) const;

private:
    std::map<Monomial, Rat> terms_;
};

inline bool operator==(const Poly2& a, const Poly2& b) { return a.terms() == b.terms(); }

// Table of two-variable moments γ_{i,j} = ∫ yⁱxʲ dμ, complete on the
// triangle i + j ≤ degree_bound, with γ₀₀ > 0.
class MomentSeq2 {
public:
    MomentSeq2(int degree_bound, std::vector<Rat> values);
    static MomentSeq2 zeros(int degree_bound);  // γ₀₀ preset to 1

    int degree_bound() const { return degree_; }
    const Rat& at(int i, int j) const;
    void set(int i, int j, const Rat& v);

    // Values in table order: degree by degree, increasing y-degree inside.
    const std::vector<Rat>& values() const { return tab_; }

    friend bool operator==(const MomentSeq2& a, const MomentSeq2& b) {
        return a.degree_ == b.degree_ && a.tab_ == b.tab_;
    }

private:
    size_t index(int i, int j) const;

    int degree_;
    std::vector<Rat> tab_;
};

enum class Axis { x, y };

enum class MatKind { moment, localizing_x, localizing_y, hyponormality };

// A moment-type matrix together with its monomial labels. Entry (p, q) is γ
// at the exponent sum of the labels, shifted by `shift` (one x for
// localizing-x, one y for localizing-y, u for the hyponormality kind).
struct MomentMat {
    int n = 0;
    MatKind kind = MatKind::moment;
    std::pair<int, int> shift{0, 0};  // (ydeg, xdeg) added to every entry
    std::vector<Monomial> basis;
    Mat mat;
};

// M(n); needs degree_bound ≥ 2n.
MomentMat moment_matrix(const MomentSeq2& seq, int n);

// M_x(n) or M_y(n); needs degree_bound ≥ 2n+1.
MomentMat localizing_matrix(const MomentSeq2& seq, int n, Axis axis);

// M_u(ℓ) with entries γ_{u+(m,n)+(p,q)}; u = (ydeg, xdeg) shift.
// u = (0,0) reproduces M(ℓ). Needs degree_bound ≥ |u| + 2ℓ.
MomentMat hyponormality_matrix(const MomentSeq2& seq, std::pair<int, int> u, int ell);

// L(Σ c·yⁱxʲ) = Σ c·γ_{ij}.
Rat riesz_eval(const MomentSeq2& seq, const Poly2& poly);

// γ̃_{ij} = L((y+k)ⁱ(x+h)ʲ); same degree bound.
MomentSeq2 translate(const MomentSeq2& seq, const Rat& h, const Rat& k);

// A nonzero polynomial vanishing on the column space, with coefficient 1 at
// its basis-latest monomial.
struct PolyRelation {
    std::vector<std::pair<Monomial, Rat>> terms;  // basis order, nonzero coeffs

    Poly2 poly() const;
    Rat coeff(const Monomial& m) const;
    std::string str() const;

    friend bool operator==(const PolyRelation& a, const PolyRelation& b) { return a.terms == b.terms; }
};

// One normalized relation per kernel vector of a moment matrix.
std::vector<PolyRelation> column_relations(const MomentMat& m);

// Structural consistency: entries whose label exponent sums coincide agree.
bool is_moment_matrix(const MomentMat& m);

} // namespace scpkit

#endif // SCPKIT_MOMENTS_HPP
