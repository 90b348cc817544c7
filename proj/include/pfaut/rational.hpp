#pragma once

// Exact arbitrary-precision rationals on top of GMP. Values are always kept
// in canonical form: gcd(numerator, denominator) = 1 and denominator >= 1,
// so operator== is plain value equality.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "pfaut/errors.hpp"

namespace pfaut {

using Int = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    // The numerator, provided the value is an integer.
    std::optional<Int> as_integer() const {
        if (!is_integer()) return std::nullopt;
        return v_.get_num();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "p" when integral, "p/q" otherwise; the inverse of parse().
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Accepts an optionally signed decimal integer or "<int>/<int>" with a
    // nonzero denominator; anything else is rejected.
    static std::optional<Rational> parse(const std::string& text) {
        auto slash = text.find('/');
        const std::string num_part = text.substr(0, slash);
        Int num, den;
        if (!parse_int(num_part, num)) return std::nullopt;
        if (slash == std::string::npos) {
            den = 1;
        } else {
            if (!parse_int(text.substr(slash + 1), den) || den == 0) return std::nullopt;
        }
        return Rational(num, den);
    }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    static bool parse_int(const std::string& s, Int& out) {
        const size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start) return false;
        for (size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        out = Int(s.substr(start), 10);
        if (s[0] == '-') out = -out;
        return true;
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// gcd(a, b) >= 0 of two rationals: gcd of numerators over lcm of denominators.
// Used to strip common content from polynomial rows.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b < 0 ? -b : b;
    if (b.is_zero()) return a < 0 ? -a : a;
    Int num, den;
    mpz_gcd(num.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    return Rational(num, den);
}

}  // namespace pfaut
