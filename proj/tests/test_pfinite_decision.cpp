#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfaut/linalg.hpp"
#include "pfaut/pfinite_decision.hpp"
#include "pfaut/serialization.hpp"
#include "pfaut/snf.hpp"
#include "pfaut/z_fatou.hpp"
#include "test_support.hpp"

using namespace pfaut;
using namespace pfaut::testsupport;

namespace {

const Poly x = Poly::variable();

PFiniteAutomaton load_p(const std::string& name) {
    return std::get<PFiniteAutomaton>(load_automaton(fixture_path(name)));
}

QWeightedAutomaton load_q(const std::string& name) {
    return std::get<QWeightedAutomaton>(load_automaton(fixture_path(name)));
}

bool in_module(const std::vector<std::vector<Poly>>& gens, const std::vector<Poly>& v) {
    return module_membership<PolynomialRing>(gens, v).has_value();
}

PFiniteAutomaton random_p_automaton(std::mt19937& rng, size_t letters) {
    std::uniform_int_distribution<size_t> dim(1, 3);
    std::uniform_int_distribution<int> num(-2, 2), deg(0, 1);
    auto entry = [&] {
        std::vector<Rational> cs(deg(rng) + 1);
        for (auto& c : cs) c = Rational(num(rng));
        return Poly(std::move(cs));
    };
    PFiniteAutomaton a;
    std::vector<std::string> names;
    for (size_t i = 0; i < letters; ++i) names.push_back(std::string(1, char('a' + i)));
    a.alphabet = Alphabet(names);
    a.dim = dim(rng);
    a.initial.resize(a.dim);
    a.final.resize(a.dim);
    for (auto& v : a.initial) v = Rational(num(rng));
    for (auto& v : a.final) v = entry();
    for (size_t s = 0; s < letters; ++s) {
        MatrixPoly m(a.dim, a.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m(i, j) = entry();
        a.transitions.push_back(std::move(m));
    }
    return a;
}

// Letter-by-letter closure of the generating set: the literal exit
// condition of the search's second loop.
void check_closure(const PFiniteAutomaton& a, const BackwardModuleGenerators& g) {
    for (const Word& u : g.words)
        for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
            Word su{s};
            su.insert(su.end(), u.begin(), u.end());
            CHECK(in_module(g.vectors, backward_vector(a, su)));
        }
}

}  // namespace

TEST_CASE("backward module generators of the factorial program") {
    const PFiniteAutomaton p3 = load_p("program3.json");
    const BackwardModuleGenerators g = generators_backward_module(p3);

    REQUIRE_FALSE(g.words.empty());
    CHECK(g.words[0].empty());
    REQUIRE(g.words.size() == g.vectors.size());
    for (size_t i = 0; i < g.words.size(); ++i) {
        CHECK(g.vectors[i] == backward_vector(p3, g.words[i]));
        CHECK(g.words[i].size() <= g.words.size());
    }

    // The module equals span{[0,x], [x(x+1),0]}: mutual membership.
    const std::vector<std::vector<Poly>> expected{{Poly(), x}, {x * (x + Poly(1)), Poly()}};
    for (const auto& v : expected) CHECK(in_module(g.vectors, v));
    for (const auto& v : g.vectors) CHECK(in_module(expected, v));

    check_closure(p3, g);
}

TEST_CASE("backward module generators in degenerate shapes") {
    // One state, beta = 1: the unit generates everything.
    PFiniteAutomaton unit;
    unit.alphabet = Alphabet({"a"});
    unit.dim = 1;
    unit.initial = {Rational(1)};
    MatrixPoly t(1, 1);
    t(0, 0) = x;
    unit.transitions = {t};
    unit.final = {Poly(1)};
    unit.validate();
    const BackwardModuleGenerators gu = generators_backward_module(unit);
    CHECK(in_module(gu.vectors, {Poly(1)}));
    for (const auto& v : gu.vectors) CHECK(in_module({{Poly(1)}}, v));
    check_closure(unit, gu);

    // beta = 0: the single generator is the zero vector.
    PFiniteAutomaton dead = unit;
    dead.final = {Poly()};
    const BackwardModuleGenerators gd = generators_backward_module(dead);
    REQUIRE(gd.words.size() == 1);
    CHECK(gd.words[0].empty());
    CHECK(gd.vectors[0] == std::vector<Poly>{Poly()});
}

TEST_CASE("zeroness") {
    const QWeightedAutomaton fib = load_q("fibonacci.json");
    CHECK_FALSE(zeroness_witness(difference(lift(fib), lift(fib))));

    const auto w = zeroness_witness(lift(fib));
    REQUIRE(w);
    CHECK(w->empty());  // f(eps) = 1

    const PFiniteAutomaton p3 = load_p("program3.json");
    const auto wb = zeroness_witness(p3);
    REQUIRE(wb);
    CHECK(*wb == Word{1});  // the word "b"
    CHECK(eval(p3, *wb) == Rational(2));

    const QWeightedAutomaton zero = load_q("zero.json");
    CHECK_FALSE(zeroness_witness(lift(zero)));
}

TEST_CASE("equivalence") {
    const PFiniteAutomaton fibl = lift(load_q("fibonacci.json"));
    const PFiniteAutomaton inv = load_p("involutions.json");
    const PFiniteAutomaton p3 = load_p("program3.json");

    for (const PFiniteAutomaton& a : {fibl, inv, p3}) CHECK_FALSE(equivalence_witness(a, a));

    const auto w = equivalence_witness(fibl, inv);
    REQUIRE(w);
    CHECK(eval(fibl, *w) != eval(inv, *w));

    // A conjugate preserves the function, so the decision is "equivalent".
    const PFiniteAutomaton minimized = lift(minimize(load_q("fibonacci.json")));
    CHECK_FALSE(equivalence_witness(fibl, minimized));

    CHECK_THROWS_AS(equivalence_witness(p3, inv), AlphabetMismatchError);
}

TEST_CASE("second-phase augmentations respect the degree bound") {
    std::mt19937 rng(4401);
    for (int trial = 0; trial < 30; ++trial) {
        const PFiniteAutomaton a = random_p_automaton(rng, 2);
        const BackwardModuleGenerators g = generators_backward_module(a);
        check_closure(a, g);

        PolyRowSpace space;
        int d = 0;
        size_t phase2 = 0;
        for (size_t i = 0; i < g.vectors.size(); ++i) {
            if (space.add(g.vectors[i])) {
                for (const auto& p : g.vectors[i]) d = std::max(d, p.degree());
            } else if (i > 0) {
                ++phase2;
            }
        }
        CHECK(phase2 <= space.dim() * static_cast<size_t>(d));
    }
}

TEST_CASE("decision outcomes agree with brute-force evaluation") {
    std::mt19937 rng(4402);
    for (int trial = 0; trial < 30; ++trial) {
        const PFiniteAutomaton a = random_p_automaton(rng, 2);
        const PFiniteAutomaton b = random_p_automaton(rng, 2);
        const auto w = equivalence_witness(a, b);
        if (w) {
            CHECK(eval(a, *w) != eval(b, *w));
        } else {
            for (const auto& u : all_words(2, 4)) CHECK(eval(a, u) == eval(b, u));
        }
    }
}
