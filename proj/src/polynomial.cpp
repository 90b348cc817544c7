#include "pfaut/polynomial.hpp"

#include <sstream>

namespace pfaut {

size_t Poly::term_count() const {
    size_t n = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) ++n;
    return n;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted() const {
    // Horner in the shifted variable: p(x+1) = (...(a_d (x+1) + a_{d-1})(x+1) + ...).
    // Multiplying by (x+1) is a shift-and-add on the coefficient vector.
    std::vector<Rational> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc.insert(acc.begin(), Rational(0));
        for (size_t i = 0; i + 1 < acc.size(); ++i) acc[i] += acc[i + 1];
        acc[0] += *it;
    }
    return Poly(std::move(acc));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = p;
    if (p.degree() < q.degree()) return {Poly(), rem};
    std::vector<Rational> quot(p.degree() - q.degree() + 1);
    const Rational lead = q.leading();
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        const size_t shift = rem.degree() - q.degree();
        const Rational c = rem.leading() / lead;
        quot[shift] = c;
        rem -= Poly::monomial(c, shift) * q;
    }
    return {Poly(std::move(quot)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(Rational(1) / leading());
}

Rational Poly::content() const {
    Rational g;
    for (const auto& c : coeffs_) g = rational_gcd(g, c);
    return g;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const Rational abs_c = c < 0 ? -c : c;
        const bool unit = abs_c == Rational(1);
        if (k == 0 || !unit) os << abs_c.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace pfaut
