#ifndef SCPKIT_RATIONAL_HPP
#define SCPKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "scpkit/errors.hpp"

namespace scpkit {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic never rounds.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                                       // NOLINT(google-explicit-constructor)
    Rat(long n) : v_(static_cast<long>(n)) {}                   // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) { canonicalize(); }
    explicit Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den) : v_(num, den) { canonicalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    // Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after
    // canonicalization. Returns nullopt on malformed text.
    static std::optional<Rat> parse(std::string_view s);

    const BigInt num() const { return v_.get_num(); }
    const BigInt den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat operator-() const {
        Rat r;
        r.v_ = -v_;
        return r;
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ShapeError("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(unsigned e) const {
        Rat acc = one();
        Rat base = *this;
        while (e != 0) {
            if (e & 1u) acc *= base;
            base *= base;
            e >>= 1u;
        }
        return acc;
    }

    // "n" for integers, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Always "n/d", including "n/1"; the canonical report rendering.
    std::string fraction_str() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    void canonicalize() {
        if (v_.get_den() == 0) throw ShapeError("Rat: zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

inline std::optional<Rat> Rat::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const auto valid_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string nums(s.substr(0, slash));
    if (!valid_int(nums)) return std::nullopt;
    if (nums[0] == '+') nums.erase(0, 1);  // GMP rejects an explicit plus
    BigInt num(nums, 10);
    if (slash == std::string_view::npos) return Rat(num, BigInt(1));
    std::string dens(s.substr(slash + 1));
    if (!valid_int(dens) || dens[0] == '-' || dens[0] == '+') return std::nullopt;
    BigInt den(dens, 10);
    if (den == 0) return std::nullopt;
    return Rat(num, den);
}

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    BigInt num = r.num(), den = r.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

} // namespace scpkit

#endif // SCPKIT_RATIONAL_HPP
