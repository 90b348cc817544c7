#pragma once

// Error types shared across the library. Contract violations that a caller
// can provoke with bad input get their own type so the CLI can map them to
// distinct exit codes; everything else is a plain runtime_error.

#include <stdexcept>
#include <string>

namespace pfaut {

// Malformed text input: automaton files, rational/polynomial literals.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A word refers to a letter outside the automaton's alphabet.
struct UnknownLetterError : std::runtime_error {
    explicit UnknownLetterError(const std::string& letter)
        : std::runtime_error("unknown letter: " + letter), letter(letter) {}
    std::string letter;
};

// Two automata combined by difference/equivalence have different alphabets.
struct AlphabetMismatchError : std::runtime_error {
    AlphabetMismatchError() : std::runtime_error("alphabets differ") {}
};

// The Hankel table did not admit a transition solution; with a well-formed
// teacher this indicates a broken internal invariant, not bad user input.
struct NotDClosedError : std::runtime_error {
    explicit NotDClosedError(const std::string& what) : std::runtime_error(what) {}
};

// largest_correct_prefix scanned the whole counterexample without finding a
// mismatch, i.e. the "counterexample" was not one.
struct NoIncorrectPrefixError : std::runtime_error {
    NoIncorrectPrefixError()
        : std::runtime_error("counterexample has no incorrect prefix") {}
};

// learn_z discovered that the hidden target is not integer-valued.
struct TargetNotIntegerError : std::runtime_error {
    explicit TargetNotIntegerError(const std::string& what) : std::runtime_error(what) {}
};

// A learning session exceeded its optional query budget.
struct QueryBudgetExceededError : std::runtime_error {
    explicit QueryBudgetExceededError(size_t budget)
        : std::runtime_error("query budget of " + std::to_string(budget) + " exceeded") {}
};

// bounded_forward_vector called with |u| > s.
struct LengthExceededError : std::runtime_error {
    LengthExceededError() : std::runtime_error("word longer than the length bound") {}
};

}  // namespace pfaut
