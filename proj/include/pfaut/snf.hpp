#pragma once

// Smith normal form over the two PIDs the toolkit needs, Z and Q[x], plus
// the module primitives built on it: membership of a vector in a finitely
// generated submodule, extraction of a canonical basis from generators, and
// exact linear-system solving over the polynomial ring.
//
// The decomposition is A = S * D * T with S, T invertible over the ring
// (elementary operations only, accumulated together with their inverses)
// and D = diag(d_1, ..., d_r) padded with zeros, d_i | d_{i+1}. Over Z the
// d_i are positive; over Q[x] they are monic. Pivots are chosen of minimal
// size: absolute value over Z, degree (ties broken by fewer terms) over
// Q[x]; among equals, the topmost-leftmost wins, which makes the output
// deterministic.

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "pfaut/matrix.hpp"

namespace pfaut {

struct IntegerRing {
    using Elem = Int;
    static bool is_zero(const Elem& a) { return a == 0; }
    static std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) {
        Elem q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }
    // g = u*a + v*b with g = gcd(a, b) canonical (here: non-negative).
    static std::tuple<Elem, Elem, Elem> xgcd(const Elem& a, const Elem& b) {
        Elem g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {g, u, v};
    }
    static bool divides(const Elem& d, const Elem& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()); }
    static Elem exact_div(const Elem& a, const Elem& d) {
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
        return q;
    }
    // Strict "is a smaller pivot candidate", by absolute value.
    static bool smaller(const Elem& a, const Elem& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    // The unit u with a = u * canonical(a); canonical means positive.
    static Elem canonical_unit(const Elem& a) { return a < 0 ? Elem(-1) : Elem(1); }
    static Elem invert_unit(const Elem& u) { return u; }
    static bool is_one(const Elem& a) { return a == 1; }
    // Rescaling a line by its content is only unit-valid over a field of
    // constants; over Z the only units are +-1, so never rescale.
    static Elem content(const std::vector<Elem>&) { return Elem(1); }
};

struct PolynomialRing {
    using Elem = Poly;
    static bool is_zero(const Elem& a) { return a.is_zero(); }
    static std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) { return Poly::divmod(a, b); }
    // g = u*a + v*b with g = gcd(a, b) monic. The remainder is rescaled to
    // monic at every step (a unit operation mirrored into the cofactors),
    // which keeps the coefficients of the whole sequence polynomially
    // sized; the textbook sequence without rescaling squares them at each
    // division.
    static std::tuple<Elem, Elem, Elem> xgcd(const Elem& a, const Elem& b) {
        Elem r0 = a, r1 = b;
        Elem s0(Rational(1)), s1, t0, t1(Rational(1));
        while (!r1.is_zero()) {
            const Rational lead = r1.leading();
            if (lead != Rational(1)) {
                const Elem inv((Rational(1) / lead));
                r1 = r1 * inv;
                s1 = s1 * inv;
                t1 = t1 * inv;
            }
            auto [q, r] = Poly::divmod(r0, r1);
            Elem s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (!r0.is_zero() && r0.leading() != Rational(1)) {
            const Elem inv((Rational(1) / r0.leading()));
            r0 = r0 * inv;
            s0 = s0 * inv;
            t0 = t0 * inv;
        }
        return {r0, s0, t0};
    }
    static bool divides(const Elem& d, const Elem& a) { return Poly::divmod(a, d).second.is_zero(); }
    static Elem exact_div(const Elem& a, const Elem& d) { return Poly::divmod(a, d).first; }
    // Lower degree first; ties broken by fewer nonzero terms.
    static bool smaller(const Elem& a, const Elem& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.term_count() < b.term_count();
    }
    // The unit (nonzero constant) with a = u * monic(a).
    static Elem canonical_unit(const Elem& a) { return Poly(a.leading()); }
    static Elem invert_unit(const Elem& u) { return Poly(Rational(1) / u.coeff(0)); }
    static bool is_one(const Elem& a) { return a.degree() == 0 && a.coeff(0) == Rational(1); }
    // Rational content across every coefficient in the line. Nonzero
    // rationals are units in Q[x]; dividing a row or column by its content
    // after each elimination step keeps coefficient sizes polynomial
    // instead of exponential.
    static Elem content(const std::vector<Elem>& line) {
        Rational c;
        for (const auto& p : line) c = rational_gcd(c, p.content());
        return c.is_zero() ? Elem(Rational(1)) : Elem(c);
    }
};

template <typename Ring>
struct SnfDecomposition {
    using Elem = typename Ring::Elem;
    Matrix<Elem> s, s_inv;          // n x n
    Matrix<Elem> t, t_inv;          // m x m
    std::vector<Elem> diagonal;     // d_1, ..., d_r (nonzero, divisibility chain)
    size_t rank = 0;

    // diag(d) padded to the input shape; s * diagonal_matrix() * t == A.
    Matrix<Elem> diagonal_matrix() const {
        Matrix<Elem> d(s.rows(), t.rows());
        for (size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
        return d;
    }
};

template <typename Ring>
SnfDecomposition<Ring> smith_normal_form(Matrix<typename Ring::Elem> d) {
    using Elem = typename Ring::Elem;
    const size_t n = d.rows(), m = d.cols();
    SnfDecomposition<Ring> out;
    out.s = Matrix<Elem>::identity(n);
    out.s_inv = Matrix<Elem>::identity(n);
    out.t = Matrix<Elem>::identity(m);
    out.t_inv = Matrix<Elem>::identity(m);

    // Elementary operations on d, each mirrored into S^-1/S (rows) or
    // T/T^-1 (columns) so that S * d * T stays equal to the input.
    auto row_swap = [&](size_t a, size_t b) {
        d.swap_rows(a, b);
        out.s.swap_columns(a, b);
        out.s_inv.swap_rows(a, b);
    };
    auto col_swap = [&](size_t a, size_t b) {
        d.swap_columns(a, b);
        out.t.swap_rows(a, b);
        out.t_inv.swap_columns(a, b);
    };
    // row_a -= q * row_b
    auto row_sub = [&](size_t a, size_t b, const Elem& q) {
        for (size_t j = 0; j < m; ++j) d(a, j) -= q * d(b, j);
        for (size_t i = 0; i < n; ++i) out.s(i, b) += q * out.s(i, a);
        for (size_t j = 0; j < n; ++j) out.s_inv(a, j) -= q * out.s_inv(b, j);
    };
    // col_a -= q * col_b
    auto col_sub = [&](size_t a, size_t b, const Elem& q) {
        for (size_t i = 0; i < n; ++i) d(i, a) -= q * d(i, b);
        for (size_t j = 0; j < m; ++j) out.t(b, j) += q * out.t(a, j);
        for (size_t i = 0; i < m; ++i) out.t_inv(i, a) -= q * out.t_inv(i, b);
    };
    // row_a += row_b (the divisibility repair step)
    auto row_add = [&](size_t a, size_t b) {
        for (size_t j = 0; j < m; ++j) d(a, j) += d(b, j);
        for (size_t i = 0; i < n; ++i) out.s(i, b) -= out.s(i, a);
        for (size_t j = 0; j < n; ++j) out.s_inv(a, j) += out.s_inv(b, j);
    };
    // row_a *= unit
    auto row_scale = [&](size_t a, const Elem& unit) {
        const Elem inv = Ring::invert_unit(unit);
        for (size_t j = 0; j < m; ++j) d(a, j) = d(a, j) * unit;
        for (size_t i = 0; i < n; ++i) out.s(i, a) = out.s(i, a) * inv;
        for (size_t j = 0; j < n; ++j) out.s_inv(a, j) = out.s_inv(a, j) * unit;
    };
    // col_a *= unit
    auto col_scale = [&](size_t a, const Elem& unit) {
        const Elem inv = Ring::invert_unit(unit);
        for (size_t i = 0; i < n; ++i) d(i, a) = d(i, a) * unit;
        for (size_t j = 0; j < m; ++j) out.t(a, j) = out.t(a, j) * inv;
        for (size_t i = 0; i < m; ++i) out.t_inv(i, a) = out.t_inv(i, a) * unit;
    };
    // Dividing a freshly combined line by its content (a unit, or 1 over Z)
    // keeps entry sizes under control during elimination.
    auto normalize_row = [&](size_t a) {
        const Elem c = Ring::content(d.row(a));
        if (!Ring::is_one(c)) row_scale(a, Ring::invert_unit(c));
    };
    auto normalize_col = [&](size_t a) {
        const Elem c = Ring::content(d.column(a));
        if (!Ring::is_one(c)) col_scale(a, Ring::invert_unit(c));
    };
    // Unimodular 2x2 transform on rows (a, b): row_a' = u*row_a + v*row_b,
    // row_b' = -eg*row_a + pg*row_b, where u*p + v*e = g, pg = p/g,
    // eg = e/g for pivot p = d(a,.) and entry e = d(b,.). Determinant
    // u*pg + v*eg = 1. One such step replaces the whole remainder
    // ping-pong of the Euclidean chain, whose intermediate rows blow up.
    auto row_transform = [&](size_t a, size_t b, const Elem& u, const Elem& v, const Elem& pg,
                             const Elem& eg) {
        for (size_t j = 0; j < m; ++j) {
            const Elem top = u * d(a, j) + v * d(b, j);
            d(b, j) = pg * d(b, j) - eg * d(a, j);
            d(a, j) = top;
        }
        for (size_t i = 0; i < n; ++i) {
            const Elem ca = pg * out.s(i, a) + eg * out.s(i, b);
            out.s(i, b) = u * out.s(i, b) - v * out.s(i, a);
            out.s(i, a) = ca;
        }
        for (size_t j = 0; j < n; ++j) {
            const Elem ra = u * out.s_inv(a, j) + v * out.s_inv(b, j);
            out.s_inv(b, j) = pg * out.s_inv(b, j) - eg * out.s_inv(a, j);
            out.s_inv(a, j) = ra;
        }
    };
    // The column-side mirror clearing d(a, cb) against the pivot d(a, ca).
    auto col_transform = [&](size_t ca, size_t cb, const Elem& u, const Elem& v, const Elem& pg,
                             const Elem& eg) {
        for (size_t i = 0; i < n; ++i) {
            const Elem left = u * d(i, ca) + v * d(i, cb);
            d(i, cb) = pg * d(i, cb) - eg * d(i, ca);
            d(i, ca) = left;
        }
        for (size_t j = 0; j < m; ++j) {
            const Elem ra = pg * out.t(ca, j) + eg * out.t(cb, j);
            out.t(cb, j) = u * out.t(cb, j) - v * out.t(ca, j);
            out.t(ca, j) = ra;
        }
        for (size_t i = 0; i < m; ++i) {
            const Elem left = u * out.t_inv(i, ca) + v * out.t_inv(i, cb);
            out.t_inv(i, cb) = pg * out.t_inv(i, cb) - eg * out.t_inv(i, ca);
            out.t_inv(i, ca) = left;
        }
    };

    for (size_t t = 0; t < std::min(n, m); ++t) {
        // Smallest nonzero entry of the remaining submatrix becomes the pivot.
        bool found = false;
        size_t pi = t, pj = t;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < m; ++j) {
                if (Ring::is_zero(d(i, j))) continue;
                if (!found || Ring::smaller(d(i, j), d(pi, pj))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(t, pi);
        col_swap(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear the pivot column with row operations. A non-dividing
            // entry is absorbed by one gcd transform, which drops the
            // pivot to gcd(pivot, entry) and zeroes the entry at once.
            for (size_t i = t + 1; i < n; ++i) {
                const Elem& e = d(i, t);
                if (Ring::is_zero(e)) continue;
                const Elem& p = d(t, t);
                if (Ring::divides(p, e)) {
                    row_sub(i, t, Ring::exact_div(e, p));
                    normalize_row(i);
                } else {
                    auto [g, u, v] = Ring::xgcd(p, e);
                    row_transform(t, i, u, v, Ring::exact_div(p, g), Ring::exact_div(e, g));
                    normalize_row(t);
                    normalize_row(i);
                }
            }
            // Same for the pivot row with column operations. A gcd
            // transform here mixes other columns into the pivot column,
            // so the column pass has to run again afterwards.
            for (size_t j = t + 1; j < m; ++j) {
                const Elem& e = d(t, j);
                if (Ring::is_zero(e)) continue;
                const Elem& p = d(t, t);
                if (Ring::divides(p, e)) {
                    col_sub(j, t, Ring::exact_div(e, p));
                    normalize_col(j);
                } else {
                    auto [g, u, v] = Ring::xgcd(p, e);
                    col_transform(t, j, u, v, Ring::exact_div(p, g), Ring::exact_div(e, g));
                    normalize_col(t);
                    normalize_col(j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Row and column are clear; force the divisibility chain. If
            // some remaining entry is not divisible by the pivot, fold its
            // row into the pivot row and keep reducing: the pivot strictly
            // shrinks, so this terminates.
            for (size_t i = t + 1; i < n && !dirty; ++i)
                for (size_t j = t + 1; j < m && !dirty; ++j)
                    if (!Ring::divides(d(t, t), d(i, j))) {
                        row_add(t, i);
                        normalize_row(t);
                        dirty = true;
                    }
        }

        const Elem unit = Ring::canonical_unit(d(t, t));
        row_scale(t, Ring::invert_unit(unit));
        out.diagonal.push_back(d(t, t));
        ++out.rank;
    }
    return out;
}

// Exact solution over the ring of A x = b, or nullopt when none exists.
// Via A = S D T: solve D y = S^-1 b entrywise with divisibility checks,
// then x = T^-1 y; free coordinates are fixed to 0.
template <typename Ring>
std::optional<std::vector<typename Ring::Elem>> solve_in_ring(
    const Matrix<typename Ring::Elem>& a, const std::vector<typename Ring::Elem>& b) {
    using Elem = typename Ring::Elem;
    const auto snf = smith_normal_form<Ring>(a);
    const std::vector<Elem> rhs = matrix_times_column(snf.s_inv, b);
    std::vector<Elem> y(a.cols());
    for (size_t i = 0; i < rhs.size(); ++i) {
        if (i < snf.rank) {
            if (!Ring::divides(snf.diagonal[i], rhs[i])) return std::nullopt;
            y[i] = Ring::exact_div(rhs[i], snf.diagonal[i]);
        } else if (!Ring::is_zero(rhs[i])) {
            return std::nullopt;
        }
    }
    return matrix_times_column(snf.t_inv, y);
}

// Is v in the Z- (resp. Q[x]-) span of the given generators? Returns the
// coefficient vector when it is.
template <typename Ring>
std::optional<std::vector<typename Ring::Elem>> module_membership(
    const std::vector<std::vector<typename Ring::Elem>>& generators,
    const std::vector<typename Ring::Elem>& v) {
    if (generators.empty()) {
        for (const auto& e : v)
            if (!Ring::is_zero(e)) return std::nullopt;
        return std::vector<typename Ring::Elem>{};
    }
    return solve_in_ring<Ring>(Matrix<typename Ring::Elem>::from_columns(generators), v);
}

// Canonical basis d_1 f_1, ..., d_r f_r of the Z-span of integer vectors:
// the first r columns of S * D from the SNF of the generator matrix.
inline std::vector<std::vector<Int>> z_basis_from_generators(
    const std::vector<std::vector<Int>>& generators) {
    if (generators.empty()) return {};
    const MatrixZ g = MatrixZ::from_columns(generators);
    const auto snf = smith_normal_form<IntegerRing>(g);
    std::vector<std::vector<Int>> basis;
    basis.reserve(snf.rank);
    for (size_t k = 0; k < snf.rank; ++k) {
        std::vector<Int> col(g.rows());
        for (size_t i = 0; i < g.rows(); ++i) col[i] = snf.s(i, k) * snf.diagonal[k];
        basis.push_back(std::move(col));
    }
    return basis;
}

// Q[x]-solutions of A X = b, column by column.
inline std::optional<std::vector<Poly>> solve_over_polynomial_ring(const MatrixPoly& a,
                                                                   const std::vector<Poly>& b) {
    return solve_in_ring<PolynomialRing>(a, b);
}

// Membership of a rational vector in the Z-span of rational generators:
// scale everything by the common denominator and decide over Z. (The
// generator-search loops produce rational candidate vectors.)
std::optional<std::vector<Int>> z_module_membership_rational(
    const std::vector<std::vector<Rational>>& generators, const std::vector<Rational>& v);

}  // namespace pfaut
