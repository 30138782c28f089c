#ifndef SCPKIT_QUADEXT_HPP
#define SCPKIT_QUADEXT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "scpkit/errors.hpp"
#include "scpkit/rational.hpp"

namespace scpkit {

// Quadratic-surd scalar p + q·√radicand over the rationals. Normal form:
// radicand ≥ 0, and whenever the radicand is a perfect square (or q = 0) the
// value collapses to a pure rational with q = radicand = 0. Equality is exact.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rat& p) : p_(p) {}            // NOLINT(google-explicit-constructor)
    QuadExt(int p) : p_(p) {}                   // NOLINT(google-explicit-constructor)
    QuadExt(Rat p, Rat q, Rat radicand) : p_(std::move(p)), q_(std::move(q)), v_(std::move(radicand)) {
        normalize();
    }

    const Rat& rat_part() const { return p_; }
    const Rat& surd_coeff() const { return q_; }
    const Rat& radicand() const { return v_; }

    bool is_rational() const { return q_.is_zero(); }

    // Value as a Rat; a surd here means a broken rationality invariant upstream.
    Rat to_rat() const {
        if (!is_rational()) throw ConsistencyError("QuadExt: irrational value where a rational was required");
        return p_;
    }

    QuadExt conjugate() const {
        QuadExt r;
        r.p_ = p_;
        r.q_ = -q_;
        r.v_ = v_;
        return r;
    }

    QuadExt operator-() const {
        QuadExt r;
        r.p_ = -p_;
        r.q_ = -q_;
        r.v_ = v_;
        return r;
    }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        const auto [qa, qb, v] = aligned(a, b);
        return QuadExt(a.p_ + b.p_, qa + qb, v);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        // (p1 + q1√v)(p2 + q2√v) = p1p2 + q1q2·v + (p1q2 + p2q1)√v
        const auto [qa, qb, v] = aligned(a, b);
        return QuadExt(a.p_ * b.p_ + qa * qb * v, a.p_ * qb + b.p_ * qa, v);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero()) throw ShapeError("QuadExt: division by zero");
        // 1/(p+q√v) = (p−q√v)/(p²−q²v); the norm is nonzero for nonzero values
        Rat norm = b.p_ * b.p_ - b.q_ * b.q_ * b.v_;
        if (norm.is_zero()) throw ConsistencyError("QuadExt: zero norm for nonzero value");
        QuadExt inv(b.p_ / norm, -b.q_ / norm, b.v_);
        return a * inv;
    }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    QuadExt pow(unsigned e) const {
        QuadExt acc(Rat::one());
        QuadExt base = *this;
        while (e != 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    // Exact sign of p + q√v.
    int sign() const {
        if (q_.is_zero()) return p_.sign();
        if (p_.is_zero()) return q_.sign();
        if (p_.sign() == q_.sign()) return p_.sign();
        // Opposite signs: compare p² against q²v.
        const Rat p2 = p_ * p_, q2v = q_ * q_ * v_;
        if (p2 == q2v) return 0;  // cannot happen in normal form (v not a square)
        return p2 > q2v ? p_.sign() : q_.sign();
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.q_.is_zero() || b.q_.is_zero()) return a.p_ == b.p_ && a.q_ == b.q_;
        if (a.p_ != b.p_) return false;
        // Same value across representations: q₁√v₁ = q₂√v₂ iff the signs
        // agree and q₁²v₁ = q₂²v₂.
        return a.q_.sign() == b.q_.sign() && a.q_ * a.q_ * a.v_ == b.q_ * b.q_ * b.v_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

    // √r as a QuadExt (rational when r is a perfect square). r must be ≥ 0.
    static QuadExt sqrt(const Rat& r) {
        if (r.sign() < 0) throw ShapeError("QuadExt: square root of a negative rational");
        return QuadExt(Rat::zero(), Rat::one(), r);
    }

    std::string str() const {
        if (is_rational()) return p_.str();
        std::string s;
        if (!p_.is_zero()) {
            s += p_.str();
            s += q_.sign() < 0 ? "-" : "+";
        } else if (q_.sign() < 0) {
            s += "-";
        }
        const Rat qa = q_.abs();
        if (qa != Rat::one()) s += qa.is_integer() ? qa.str() : "(" + qa.str() + ")";
        s += "√" + (v_.is_integer() ? v_.str() : "(" + v_.str() + ")");
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    // Surd coefficients of a and b over a common radicand. Representations
    // like √8 and 2√2 live in the same field exactly when the product of the
    // radicands is a perfect square.
    static std::tuple<Rat, Rat, Rat> aligned(const QuadExt& a, const QuadExt& b) {
        if (a.q_.is_zero()) return {a.q_, b.q_, b.v_};
        if (b.q_.is_zero() || a.v_ == b.v_) return {a.q_, b.q_, a.v_};
        const auto s = rational_sqrt(a.v_ * b.v_);
        if (!s)
            throw ConsistencyError("QuadExt: mixing incompatible radicands " + a.v_.str() + " and " +
                                   b.v_.str());
        return {a.q_, b.q_ * *s / a.v_, a.v_};
    }

    void normalize() {
        if (v_.sign() < 0) throw ShapeError("QuadExt: negative radicand");
        if (q_.is_zero() || v_.is_zero()) {
            q_ = Rat::zero();
            v_ = Rat::zero();
            return;
        }
        if (auto s = rational_sqrt(v_)) {
            p_ += q_ * *s;
            q_ = Rat::zero();
            v_ = Rat::zero();
        }
    }

    Rat p_;
    Rat q_;
    Rat v_;
};

} // namespace scpkit

#endif // SCPKIT_QUADEXT_HPP
