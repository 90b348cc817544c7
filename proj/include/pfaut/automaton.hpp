#pragma once

// The three automaton flavors and their exact semantics.
//
// A Q-weighted automaton (alpha, mu, beta) of dimension n assigns to a word
// w = s_1...s_k the value alpha * mu(s_1) * ... * mu(s_k) * beta. A P-finite
// automaton carries polynomial transition/final entries evaluated at the
// letter's 1-based position: [A](w) = alpha * mu(s_1,1) * ... * mu(s_k,k)
// * beta(k+1). Z-weighted automata are Q-weighted ones whose entries happen
// to be integers, wrapped so the invariant is checked once at construction.
//
// Dimension 0 is legal everywhere and evaluates to 0 on every word; the
// decision procedures produce it for the zero function.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfaut/errors.hpp"
#include "pfaut/matrix.hpp"

namespace pfaut {

// Ordered list of distinct non-empty letter tokens. The declared order is
// part of the automaton's identity: every search loop walks letters in it.
class Alphabet {
  public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    size_t size() const { return letters_.size(); }
    const std::string& letter(size_t i) const { return letters_[i]; }
    const std::vector<std::string>& letters() const { return letters_; }
    std::optional<uint32_t> index_of(const std::string& token) const;
    bool single_char_letters() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_;
    }

  private:
    std::vector<std::string> letters_;
    std::map<std::string, uint32_t> index_;
};

// Words are sequences of letter indices into the automaton's alphabet.
using Word = std::vector<uint32_t>;

// Parses a word: tokens split on whitespace/commas when present, otherwise
// one letter per character when all alphabet letters are single characters,
// otherwise the whole string is one token. "" and "eps" denote the empty
// word. Throws UnknownLetterError for tokens outside the alphabet.
Word parse_word(const Alphabet& alphabet, const std::string& text);
// Inverse presentation: plain concatenation when the letters are single
// characters, space-joined otherwise; the empty word prints as "eps".
std::string format_word(const Alphabet& alphabet, const Word& word);

struct QWeightedAutomaton {
    Alphabet alphabet;
    size_t dim = 0;
    std::vector<Rational> initial;      // row vector, length dim
    std::vector<MatrixQ> transitions;   // one dim x dim matrix per letter
    std::vector<Rational> final;        // column vector, length dim

    void validate() const;  // shape check; throws std::invalid_argument
};

struct PFiniteAutomaton {
    Alphabet alphabet;
    size_t dim = 0;
    std::vector<Rational> initial;        // constants, per the model
    std::vector<MatrixPoly> transitions;  // entries in Q[x]
    std::vector<Poly> final;

    void validate() const;
};

// A Q-weighted automaton with all-integer entries.
class ZWeightedAutomaton {
  public:
    const QWeightedAutomaton& base() const { return base_; }

  private:
    friend std::optional<ZWeightedAutomaton> as_z_automaton(const QWeightedAutomaton&);
    QWeightedAutomaton base_;
};

// Checks integrality of every entry; nullopt when some entry is not in Z.
std::optional<ZWeightedAutomaton> as_z_automaton(const QWeightedAutomaton& a);

Rational eval(const QWeightedAutomaton& a, const Word& w);
Rational eval(const PFiniteAutomaton& a, const Word& w);

// The backward function B_A(u)(x) = mu(u, x) * beta(x + |u|), computed by
// the recursion B(eps) = beta, B(sw) = mu(s, x) * B(w)(x+1). Its value at
// x = 1 dotted with alpha is [A](u).
std::vector<Poly> backward_vector(const PFiniteAutomaton& a, const Word& u);

// Embeds a Q-weighted automaton as a degree-0 P-finite one.
PFiniteAutomaton lift(const QWeightedAutomaton& a);
// The converse embedding; nullopt unless every entry is constant.
std::optional<QWeightedAutomaton> as_q_automaton(const PFiniteAutomaton& a);

// Block-diagonal difference automaton: [diff](w) = [a](w) - [b](w).
// Throws AlphabetMismatchError when the alphabets differ.
PFiniteAutomaton difference(const PFiniteAutomaton& a, const PFiniteAutomaton& b);
QWeightedAutomaton difference(const QWeightedAutomaton& a, const QWeightedAutomaton& b);

}  // namespace pfaut
