#pragma once

// Dense univariate polynomials over Rational, coefficients in ascending
// order of degree. Invariant: no trailing zero coefficients, so the zero
// polynomial is the empty coefficient list. degree() stands in for the
// usual "degree(0) = -infinity" with the sentinel kZeroDegree = -1; every
// comparison that matters treats it as smaller than any true degree.

#include <string>
#include <utility>
#include <vector>

#include "pfaut/rational.hpp"

namespace pfaut {

class Poly {
  public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }
    Poly(int c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Poly variable() { return Poly(std::vector<Rational>{0, 1}); }
    static Poly monomial(const Rational& c, size_t k) {
        std::vector<Rational> cs(k + 1);
        cs[k] = c;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    size_t term_count() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const;  // Horner evaluation
    Poly shifted() const;                          // p(x) -> p(x+1)

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& c) const;

    // p = q*quot + rem with degree(rem) < degree(q); q must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
    // Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    Poly monic() const;
    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; content(0) = 0.
    Rational content() const;

    std::string str(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace pfaut
