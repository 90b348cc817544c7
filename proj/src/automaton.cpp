#include "pfaut/automaton.hpp"

#include <sstream>

namespace pfaut {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    for (uint32_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].empty()) throw std::invalid_argument("empty alphabet letter");
        if (!index_.emplace(letters_[i], i).second)
            throw std::invalid_argument("duplicate alphabet letter: " + letters_[i]);
    }
}

std::optional<uint32_t> Alphabet::index_of(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Alphabet::single_char_letters() const {
    for (const auto& l : letters_)
        if (l.size() != 1) return false;
    return true;
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    if (text.empty() || text == "eps") return {};
    std::vector<std::string> tokens;
    if (text.find_first_of(" \t,") != std::string::npos) {
        std::string cur;
        for (char ch : text) {
            if (ch == ' ' || ch == '\t' || ch == ',') {
                if (!cur.empty()) tokens.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
    } else if (alphabet.single_char_letters()) {
        for (char ch : text) tokens.emplace_back(1, ch);
    } else {
        tokens.push_back(text);
    }
    Word w;
    w.reserve(tokens.size());
    for (const auto& tok : tokens) {
        if (tok == "eps") continue;
        const auto idx = alphabet.index_of(tok);
        if (!idx) throw UnknownLetterError(tok);
        w.push_back(*idx);
    }
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty()) return "eps";
    std::ostringstream os;
    const bool compact = alphabet.single_char_letters();
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !compact) os << ' ';
        os << alphabet.letter(word[i]);
    }
    return os.str();
}

namespace {

template <typename A>
void check_shape(const A& a) {
    if (a.initial.size() != a.dim || a.final.size() != a.dim)
        throw std::invalid_argument("initial/final vector length != dimension");
    if (a.transitions.size() != a.alphabet.size())
        throw std::invalid_argument("one transition matrix per letter required");
    for (const auto& m : a.transitions)
        if (m.rows() != a.dim || m.cols() != a.dim)
            throw std::invalid_argument("transition matrix shape != dimension");
}

}  // namespace

void QWeightedAutomaton::validate() const { check_shape(*this); }
void PFiniteAutomaton::validate() const { check_shape(*this); }

std::optional<ZWeightedAutomaton> as_z_automaton(const QWeightedAutomaton& a) {
    auto all_integer = [](const std::vector<Rational>& v) {
        for (const auto& x : v)
            if (!x.is_integer()) return false;
        return true;
    };
    if (!all_integer(a.initial) || !all_integer(a.final)) return std::nullopt;
    for (const auto& m : a.transitions)
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_integer()) return std::nullopt;
    ZWeightedAutomaton z;
    z.base_ = a;
    return z;
}

namespace {

// Letter indices must address a transition matrix; anything else is a word
// formed against a different alphabet.
void check_letter(size_t letter_count, uint32_t s) {
    if (s >= letter_count) throw UnknownLetterError("#" + std::to_string(s));
}

MatrixQ eval_matrix(const MatrixPoly& m, const Rational& at) {
    MatrixQ out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(at);
    return out;
}

}  // namespace

Rational eval(const QWeightedAutomaton& a, const Word& w) {
    std::vector<Rational> x = a.initial;
    for (const uint32_t s : w) {
        check_letter(a.transitions.size(), s);
        x = row_times_matrix(x, a.transitions[s]);
    }
    return dot(x, a.final);
}

Rational eval(const PFiniteAutomaton& a, const Word& w) {
    std::vector<Rational> x = a.initial;
    for (size_t k = 0; k < w.size(); ++k) {
        check_letter(a.transitions.size(), w[k]);
        x = row_times_matrix(x, eval_matrix(a.transitions[w[k]], Rational(static_cast<long>(k + 1))));
    }
    std::vector<Rational> fin(a.dim);
    const Rational at(static_cast<long>(w.size() + 1));
    for (size_t i = 0; i < a.dim; ++i) fin[i] = a.final[i](at);
    return dot(x, fin);
}

std::vector<Poly> backward_vector(const PFiniteAutomaton& a, const Word& u) {
    std::vector<Poly> b = a.final;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        check_letter(a.transitions.size(), *it);
        for (auto& e : b) e = e.shifted();
        b = matrix_times_column(a.transitions[*it], b);
    }
    return b;
}

PFiniteAutomaton lift(const QWeightedAutomaton& a) {
    PFiniteAutomaton p;
    p.alphabet = a.alphabet;
    p.dim = a.dim;
    p.initial = a.initial;
    p.transitions.reserve(a.transitions.size());
    for (const auto& m : a.transitions) {
        MatrixPoly pm(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) pm(i, j) = Poly(m(i, j));
        p.transitions.push_back(std::move(pm));
    }
    p.final.reserve(a.final.size());
    for (const auto& x : a.final) p.final.emplace_back(x);
    return p;
}

std::optional<QWeightedAutomaton> as_q_automaton(const PFiniteAutomaton& a) {
    QWeightedAutomaton q;
    q.alphabet = a.alphabet;
    q.dim = a.dim;
    q.initial = a.initial;
    q.transitions.reserve(a.transitions.size());
    for (const auto& m : a.transitions) {
        MatrixQ qm(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                if (!m(i, j).is_constant()) return std::nullopt;
                qm(i, j) = m(i, j).coeff(0);
            }
        q.transitions.push_back(std::move(qm));
    }
    q.final.reserve(a.final.size());
    for (const auto& x : a.final) {
        if (!x.is_constant()) return std::nullopt;
        q.final.push_back(x.coeff(0));
    }
    return q;
}

namespace {

template <typename A, typename Scalar>
A block_difference(const A& a, const A& b) {
    if (!(a.alphabet == b.alphabet)) throw AlphabetMismatchError();
    A out;
    out.alphabet = a.alphabet;
    out.dim = a.dim + b.dim;
    out.initial.resize(out.dim);
    for (size_t i = 0; i < a.dim; ++i) out.initial[i] = a.initial[i];
    for (size_t i = 0; i < b.dim; ++i) out.initial[a.dim + i] = -b.initial[i];
    for (size_t s = 0; s < a.alphabet.size(); ++s) {
        Matrix<Scalar> m(out.dim, out.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m(i, j) = a.transitions[s](i, j);
        for (size_t i = 0; i < b.dim; ++i)
            for (size_t j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.transitions[s](i, j);
        out.transitions.push_back(std::move(m));
    }
    out.final.resize(out.dim);
    for (size_t i = 0; i < a.dim; ++i) out.final[i] = a.final[i];
    for (size_t i = 0; i < b.dim; ++i) out.final[a.dim + i] = b.final[i];
    return out;
}

}  // namespace

PFiniteAutomaton difference(const PFiniteAutomaton& a, const PFiniteAutomaton& b) {
    return block_difference<PFiniteAutomaton, Poly>(a, b);
}

QWeightedAutomaton difference(const QWeightedAutomaton& a, const QWeightedAutomaton& b) {
    return block_difference<QWeightedAutomaton, Rational>(a, b);
}

}  // namespace pfaut
