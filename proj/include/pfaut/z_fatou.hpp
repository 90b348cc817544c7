#pragma once

// Deciding whether a Q-weighted automaton is Z-valued, and converting it to
// an equivalent Z-weighted automaton when it is (the effective Fatou
// property). Also Q-weighted minimization, which is the same two
// conjugation passes with Q-bases instead of a Z-module basis.

#include <optional>
#include <variant>
#include <vector>

#include "pfaut/automaton.hpp"

namespace pfaut {

// Words whose forward vectors alpha * mu(w) form a basis of the forward
// space, found by breadth-first right extension w -> ws (Tzeng's search:
// FIFO over the word list, letters in declared order). Starts with eps;
// when alpha = 0 the list is just {eps} and the basis is empty.
std::vector<Word> forward_basis_words(const QWeightedAutomaton& a);
// Dual search over backward vectors mu(w) * beta with left extension
// w -> sw.
std::vector<Word> backward_basis_words(const QWeightedAutomaton& a);

enum class ConjugationKind { forward, backward };

// A conjugate automaton together with the change of basis that produced
// it. For kind == forward, rows of change_of_basis span the forward space
// and alpha' F = alpha, mu'(s) F = F mu(s), beta' = F beta. For backward,
// columns span the backward space and alpha' = alpha B, B mu'(s) =
// mu(s) B, B beta' = beta.
struct ConjugationResult {
    QWeightedAutomaton automaton;
    MatrixQ change_of_basis;
    ConjugationKind kind;
};

// f's rows must be linearly independent and span a mu-invariant space
// containing alpha; both hold for bases returned by the searches above.
// Violations throw std::invalid_argument.
ConjugationResult conjugate_forward(const QWeightedAutomaton& a, const MatrixQ& f);
// Dual: b's columns span a mu-invariant space containing beta.
ConjugationResult conjugate_backward(const QWeightedAutomaton& a, const MatrixQ& b);

// Outcome of the integer-generator search: either a word witnessing a
// non-integer forward vector, or words whose vectors generate the forward
// Z-module.
struct GeneratorSearchOutcome {
    std::optional<Word> witness;
    std::vector<Word> words;  // meaningful when witness is absent
};

// Two-phase search: saturate the forward space over Q by right extension,
// then saturate the Z-module. Any word whose vector leaves Z^n (including
// eps itself, when alpha does) is returned as soon as it is seen.
GeneratorSearchOutcome integer_generators(const QWeightedAutomaton& a);

// Either a word w with [a](w) not an integer, or an equivalent Z-weighted
// automaton. When several backward-basis coordinates witness
// non-integrality, the smallest basis index is used.
std::variant<Word, ZWeightedAutomaton> compute_z(const QWeightedAutomaton& a);

// Minimal Q-weighted automaton equivalent to a: the forward conjugate of
// the backward conjugate. Its dimension is the rank of the Hankel matrix.
QWeightedAutomaton minimize(const QWeightedAutomaton& a);

}  // namespace pfaut
