#pragma once

// Zeroness and equivalence for P-finite automata via the finitely generated
// backward Q[x]-module: saturate the span of backward vectors first over
// the field Q(x), then over the ring Q[x]; [A] is the zero function iff
// alpha * v(1) = 0 for every generator v.

#include <optional>
#include <vector>

#include "pfaut/automaton.hpp"

namespace pfaut {

struct BackwardModuleGenerators {
    std::vector<Word> words;                 // insertion order, eps first
    std::vector<std::vector<Poly>> vectors;  // backward_vector of each word
};

// Two-phase left-extension search (w -> sw), FIFO over the word list with
// letters in declared order: phase 1 adds words while the backward vector
// is independent over Q(x), phase 2 re-scans and adds words while the
// vector escapes the Q[x]-module of the collected generators. On return
// every one-letter extension of a generator lies in the module.
BackwardModuleGenerators generators_backward_module(const PFiniteAutomaton& a);

// First generator word (in insertion order) whose evaluation is nonzero,
// or nullopt when [a] is identically zero.
std::optional<Word> zeroness_witness(const PFiniteAutomaton& a);

// Word on which the two automata differ, or nullopt when equivalent.
// Throws AlphabetMismatchError when the alphabets differ.
std::optional<Word> equivalence_witness(const PFiniteAutomaton& a, const PFiniteAutomaton& b);

}  // namespace pfaut
