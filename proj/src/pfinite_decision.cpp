#include "pfaut/pfinite_decision.hpp"

#include "pfaut/linalg.hpp"
#include "pfaut/snf.hpp"

namespace pfaut {
namespace {

// B(sw) = mu(s, x) * B(w)(x+1).
std::vector<Poly> extend_left(const PFiniteAutomaton& a, uint32_t s, const std::vector<Poly>& b) {
    std::vector<Poly> shifted(b.size());
    for (size_t i = 0; i < b.size(); ++i) shifted[i] = b[i].shifted();
    return matrix_times_column(a.transitions[s], shifted);
}

}  // namespace

BackwardModuleGenerators generators_backward_module(const PFiniteAutomaton& a) {
    BackwardModuleGenerators out;
    out.words.push_back({});
    out.vectors.push_back(a.final);

    // Phase 1: independence over the field Q(x). Once a vector falls into
    // the span it stays there, so each word/letter pair is tested once.
    {
        PolyRowSpace space;
        space.add(a.final);
        for (size_t idx = 0; idx < out.words.size(); ++idx) {
            for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
                std::vector<Poly> v = extend_left(a, s, out.vectors[idx]);
                if (!space.add(v)) continue;
                Word w = out.words[idx];
                w.insert(w.begin(), s);
                out.words.push_back(std::move(w));
                out.vectors.push_back(std::move(v));
            }
        }
    }
    // Phase 2: membership in the Q[x]-module of the generators collected so
    // far, rescanning from the beginning; additions join the queue. The
    // module only grows, so a pair that passes the test never needs
    // re-testing.
    for (size_t idx = 0; idx < out.words.size(); ++idx) {
        for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
            std::vector<Poly> v = extend_left(a, s, out.vectors[idx]);
            if (module_membership<PolynomialRing>(out.vectors, v)) continue;
            Word w = out.words[idx];
            w.insert(w.begin(), s);
            out.words.push_back(std::move(w));
            out.vectors.push_back(std::move(v));
        }
    }
    return out;
}

std::optional<Word> zeroness_witness(const PFiniteAutomaton& a) {
    const BackwardModuleGenerators gens = generators_backward_module(a);
    for (size_t k = 0; k < gens.words.size(); ++k) {
        // [a](u) = alpha * B(u)(1).
        Rational value;
        for (size_t i = 0; i < a.dim; ++i) value += a.initial[i] * gens.vectors[k][i](Rational(1));
        if (!value.is_zero()) return gens.words[k];
    }
    return std::nullopt;
}

std::optional<Word> equivalence_witness(const PFiniteAutomaton& a, const PFiniteAutomaton& b) {
    return zeroness_witness(difference(a, b));
}

}  // namespace pfaut
