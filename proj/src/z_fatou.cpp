#include "pfaut/z_fatou.hpp"

#include "pfaut/linalg.hpp"
#include "pfaut/snf.hpp"

namespace pfaut {
namespace {

bool is_integer_vector(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

// Breadth-first basis search shared by the forward and backward variants;
// `step` maps a vector through one letter. The word list always contains
// eps; `vectors` holds the basis vectors in word order and is empty exactly
// when the seed is zero (trivial space).
struct BasisSearch {
    std::vector<Word> words;
    std::vector<std::vector<Rational>> vectors;
};

template <typename Step>
BasisSearch basis_search(const std::vector<Rational>& seed, size_t letters, Step step,
                         bool extend_right) {
    BasisSearch out;
    out.words.push_back({});
    RationalRowSpace space;
    if (!space.add(seed)) return out;
    out.vectors.push_back(seed);
    // FIFO over basis words, letters in declared order; every added word's
    // vector enlarged the space, so the search is monotone and each
    // word/letter pair needs one test.
    for (size_t idx = 0; idx < out.vectors.size(); ++idx) {
        for (uint32_t s = 0; s < letters; ++s) {
            std::vector<Rational> v = step(out.vectors[idx], s);
            if (!space.add(v)) continue;
            Word w = out.words[idx];
            if (extend_right) w.push_back(s);
            else w.insert(w.begin(), s);
            out.words.push_back(std::move(w));
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

BasisSearch forward_search(const QWeightedAutomaton& a) {
    return basis_search(
        a.initial, a.alphabet.size(),
        [&](const std::vector<Rational>& v, uint32_t s) {
            return row_times_matrix(v, a.transitions[s]);
        },
        /*extend_right=*/true);
}

BasisSearch backward_search(const QWeightedAutomaton& a) {
    return basis_search(
        a.final, a.alphabet.size(),
        [&](const std::vector<Rational>& v, uint32_t s) {
            return matrix_times_column(a.transitions[s], v);
        },
        /*extend_right=*/false);
}

std::vector<Rational> forward_vector(const QWeightedAutomaton& a, const Word& w) {
    std::vector<Rational> v = a.initial;
    for (const uint32_t s : w) v = row_times_matrix(v, a.transitions[s]);
    return v;
}

}  // namespace

std::vector<Word> forward_basis_words(const QWeightedAutomaton& a) {
    return forward_search(a).words;
}

std::vector<Word> backward_basis_words(const QWeightedAutomaton& a) {
    return backward_search(a).words;
}

ConjugationResult conjugate_forward(const QWeightedAutomaton& a, const MatrixQ& f) {
    const size_t m = f.rows();
    QWeightedAutomaton out;
    out.alphabet = a.alphabet;
    out.dim = m;

    auto express = [&](const std::vector<Rational>& v) {
        auto c = coordinates_in_rows(f, v);
        if (!c) throw std::invalid_argument("vector outside the row space of F");
        return *c;
    };
    out.initial = express(a.initial);
    for (const auto& mu : a.transitions) {
        // mu'(s) F = F mu(s): row i of mu'(s) expresses row i of F mu(s).
        const MatrixQ rhs = f * mu;
        MatrixQ t(m, m);
        for (size_t i = 0; i < m; ++i) {
            const std::vector<Rational> c = express(rhs.row(i));
            for (size_t j = 0; j < m; ++j) t(i, j) = c[j];
        }
        out.transitions.push_back(std::move(t));
    }
    out.final = matrix_times_column(f, a.final);
    return {std::move(out), f, ConjugationKind::forward};
}

ConjugationResult conjugate_backward(const QWeightedAutomaton& a, const MatrixQ& b) {
    const size_t m = b.cols();
    QWeightedAutomaton out;
    out.alphabet = a.alphabet;
    out.dim = m;

    // Solving B x = v; columns of B are independent, so x is unique.
    auto express = [&](const std::vector<Rational>& v) {
        auto c = solve(b, v);
        if (!c) throw std::invalid_argument("vector outside the column space of B");
        return *c;
    };
    out.initial = row_times_matrix(a.initial, b);
    for (const auto& mu : a.transitions) {
        // B mu'(s) = mu(s) B: column j of mu'(s) expresses column j of mu(s) B.
        const MatrixQ rhs = mu * b;
        MatrixQ t(m, m);
        for (size_t j = 0; j < m; ++j) {
            const std::vector<Rational> c = express(rhs.column(j));
            for (size_t i = 0; i < m; ++i) t(i, j) = c[i];
        }
        out.transitions.push_back(std::move(t));
    }
    out.final = express(a.final);
    return {std::move(out), b, ConjugationKind::backward};
}

GeneratorSearchOutcome integer_generators(const QWeightedAutomaton& a) {
    GeneratorSearchOutcome out;
    out.words.push_back({});
    // The seed word's vector is alpha itself; it gets the same integrality
    // check as every later addition.
    if (!is_integer_vector(a.initial)) {
        out.witness = Word{};
        return out;
    }
    std::vector<std::vector<Rational>> vectors{a.initial};

    // Phase 1: saturate the forward space over Q (right extensions, FIFO).
    {
        RationalRowSpace space;
        space.add(a.initial);
        for (size_t idx = 0; idx < out.words.size(); ++idx) {
            for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
                std::vector<Rational> v = row_times_matrix(vectors[idx], a.transitions[s]);
                if (!space.add(v)) continue;
                Word w = out.words[idx];
                w.push_back(s);
                out.words.push_back(w);
                vectors.push_back(v);
                if (!is_integer_vector(v)) {
                    out.witness = std::move(w);
                    return out;
                }
            }
        }
    }
    // Phase 2: saturate the Z-module spanned by the collected vectors. A
    // vector that fell inside the Q-span may still be outside the Z-span;
    // membership only ever grows, so one FIFO pass from the start suffices.
    for (size_t idx = 0; idx < out.words.size(); ++idx) {
        for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
            std::vector<Rational> v = row_times_matrix(vectors[idx], a.transitions[s]);
            if (z_module_membership_rational(vectors, v)) continue;
            Word w = out.words[idx];
            w.push_back(s);
            out.words.push_back(w);
            vectors.push_back(v);
            if (!is_integer_vector(v)) {
                out.witness = std::move(w);
                return out;
            }
        }
    }
    return out;
}

std::variant<Word, ZWeightedAutomaton> compute_z(const QWeightedAutomaton& a) {
    // Backward conjugate: each forward vector of the conjugate lists the
    // values [a](w . basis_word_i), so integrality of the function reduces
    // to integrality of forward vectors.
    const BasisSearch back = backward_search(a);
    const MatrixQ b = back.vectors.empty() ? MatrixQ(a.dim, 0)
                                           : MatrixQ::from_columns(back.vectors);
    const QWeightedAutomaton conj = conjugate_backward(a, b).automaton;

    GeneratorSearchOutcome gen = integer_generators(conj);
    if (gen.witness) {
        const std::vector<Rational> v = forward_vector(conj, *gen.witness);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_integer()) continue;
            // [a](witness . w_i) = v_i is not an integer; smallest i wins.
            Word w = *gen.witness;
            w.insert(w.end(), back.words[i].begin(), back.words[i].end());
            return w;
        }
        throw std::logic_error("integer_generators returned a spurious witness");
    }

    // All generator vectors are integral; extract a Z-basis of their span
    // and express the automaton in it. Integrality of the result is the
    // point of the construction, so failing the final check is a bug.
    std::vector<std::vector<Int>> gens_z;
    for (const Word& w : gen.words) {
        const std::vector<Rational> v = forward_vector(conj, w);
        std::vector<Int> vz(v.size());
        for (size_t i = 0; i < v.size(); ++i) vz[i] = *v[i].as_integer();
        gens_z.push_back(std::move(vz));
    }
    const std::vector<std::vector<Int>> z_basis = z_basis_from_generators(gens_z);
    MatrixQ f(z_basis.size(), conj.dim);
    for (size_t i = 0; i < z_basis.size(); ++i)
        for (size_t j = 0; j < conj.dim; ++j) f(i, j) = Rational(z_basis[i][j]);
    const QWeightedAutomaton result = conjugate_forward(conj, f).automaton;
    auto z = as_z_automaton(result);
    if (!z) throw std::logic_error("forward conjugate over a Z-basis was not integral");
    return *z;
}

QWeightedAutomaton minimize(const QWeightedAutomaton& a) {
    const BasisSearch back = backward_search(a);
    const MatrixQ b = back.vectors.empty() ? MatrixQ(a.dim, 0)
                                           : MatrixQ::from_columns(back.vectors);
    const QWeightedAutomaton a1 = conjugate_backward(a, b).automaton;

    const BasisSearch fwd = forward_search(a1);
    const MatrixQ f = fwd.vectors.empty() ? MatrixQ(0, a1.dim)
                                          : MatrixQ::from_rows(fwd.vectors);
    return conjugate_forward(a1, f).automaton;
}

}  // namespace pfaut
