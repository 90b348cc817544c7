#include "pfaut/linalg.hpp"

namespace pfaut {
namespace {

// Reduced row echelon form in place; returns the pivot column of each
// echelon row. Works on any column count, including augmented matrices.
std::vector<size_t> rref(MatrixQ& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = Rational(1) / m(r, c);
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const MatrixQ& m) {
    MatrixQ work = m;
    return rref(work).size();
}

size_t rank(const MatrixPoly& m) {
    PolyRowSpace space;
    size_t r = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        if (space.add(m.row(i))) ++r;
    return r;
}

std::optional<std::vector<Rational>> solve(const MatrixQ& a, const std::vector<Rational>& b) {
    MatrixQ aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<Rational> x(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

std::optional<std::vector<Rational>> coordinates_in_rows(const MatrixQ& f,
                                                         const std::vector<Rational>& v) {
    return solve(f.transposed(), v);
}

bool RationalRowSpace::contains(const std::vector<Rational>& v) const {
    std::vector<Rational> w = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational c = w[pivots_[k]];  // by value: the loop below overwrites it
        if (c.is_zero()) continue;
        for (size_t j = 0; j < w.size(); ++j) w[j] -= c * rows_[k][j];
    }
    for (const auto& c : w)
        if (!c.is_zero()) return false;
    return true;
}

bool RationalRowSpace::add(const std::vector<Rational>& v) {
    std::vector<Rational> w = v;
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rational c = w[pivots_[k]];  // by value: the loop below overwrites it
        if (c.is_zero()) continue;
        for (size_t j = 0; j < w.size(); ++j) w[j] -= c * rows_[k][j];
    }
    size_t pivot = 0;
    while (pivot < w.size() && w[pivot].is_zero()) ++pivot;
    if (pivot == w.size()) return false;
    const Rational inv = Rational(1) / w[pivot];
    for (auto& c : w) c *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

std::vector<Poly> PolyRowSpace::reduce(std::vector<Poly> v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const size_t p = pivots_[k];
        if (v[p].is_zero()) continue;
        // Cross-multiply so the pivot cancels exactly: v := pivot*v - v_p*row.
        const Poly vp = v[p];
        const Poly& rp = rows_[k][p];
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] * rp - vp * rows_[k][j];
    }
    return v;
}

bool PolyRowSpace::contains(const std::vector<Poly>& v) const {
    const std::vector<Poly> w = reduce(v);
    for (const auto& e : w)
        if (!e.is_zero()) return false;
    return true;
}

bool PolyRowSpace::add(const std::vector<Poly>& v) {
    std::vector<Poly> w = reduce(v);
    size_t pivot = 0;
    while (pivot < w.size() && w[pivot].is_zero()) ++pivot;
    if (pivot == w.size()) return false;
    // Strip common rational content and any common polynomial factor; the
    // row spans the same Q(x)-line and the entries stay small.
    Poly common;
    Rational content;
    for (const auto& e : w) {
        common = Poly::gcd(common, e);
        content = rational_gcd(content, e.content());
    }
    if (!content.is_zero() && content != Rational(1)) {
        const Rational inv = Rational(1) / content;
        for (auto& e : w) e = e.scaled(inv);
    }
    if (common.degree() > 0) {
        for (auto& e : w) e = Poly::divmod(e, common).first;
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace pfaut
