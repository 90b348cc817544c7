#pragma once

// Exact linear algebra over Q and over the rational-function field Q(x).
// Matrices with polynomial entries stand in for Q(x) matrices; elimination
// over Q(x) is done by cross-multiplication, so no rational-function type
// exists anywhere. Solutions fix every free variable to 0, which makes all
// solver output deterministic and reproducible.

#include <optional>
#include <vector>

#include "pfaut/matrix.hpp"

namespace pfaut {

size_t rank(const MatrixQ& m);
size_t rank(const MatrixPoly& m);  // rank over Q(x)

// Particular solution of A x = b with free variables fixed to 0, or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const MatrixQ& a, const std::vector<Rational>& b);

// Coefficients c with c * F = v, for F of full row rank (unique when it
// exists). This is how conjugated automata are expressed in a new basis.
std::optional<std::vector<Rational>> coordinates_in_rows(const MatrixQ& f,
                                                         const std::vector<Rational>& v);

// Incrementally maintained row space over Q, echelonized as vectors arrive.
// This is the membership structure behind the Tzeng-style basis searches.
class RationalRowSpace {
  public:
    // True when v is in the span of the rows added so far.
    bool contains(const std::vector<Rational>& v) const;
    // Adds v; returns true when it enlarged the space.
    bool add(const std::vector<Rational>& v);
    size_t dim() const { return rows_.size(); }

  private:
    std::vector<std::vector<Rational>> rows_;  // echelon form, pivot = leftmost nonzero
    std::vector<size_t> pivots_;
};

// Same idea over Q(x): rows carry polynomial entries, reduction uses
// cross-multiplication, and rows are kept small by stripping the rational
// content and the common polynomial factor of each stored row.
class PolyRowSpace {
  public:
    bool contains(const std::vector<Poly>& v) const;
    bool add(const std::vector<Poly>& v);
    size_t dim() const { return rows_.size(); }

  private:
    std::vector<Poly> reduce(std::vector<Poly> v) const;
    std::vector<std::vector<Poly>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace pfaut
