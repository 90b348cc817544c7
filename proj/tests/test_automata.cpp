#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pfaut/automaton.hpp"
#include "pfaut/serialization.hpp"
#include "test_support.hpp"

using namespace pfaut;
using namespace pfaut::testsupport;

namespace {

const Poly x = Poly::variable();

QWeightedAutomaton load_q(const std::string& name) {
    return std::get<QWeightedAutomaton>(load_automaton(fixture_path(name)));
}

PFiniteAutomaton load_p(const std::string& name) {
    return std::get<PFiniteAutomaton>(load_automaton(fixture_path(name)));
}

Word word(std::initializer_list<uint32_t> letters) { return Word(letters); }

Word repeat(uint32_t letter, size_t k) { return Word(k, letter); }

QWeightedAutomaton random_q_automaton(std::mt19937& rng, size_t letters) {
    std::uniform_int_distribution<size_t> dim(1, 3);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    auto entry = [&] { return Rational(num(rng), den(rng)); };
    QWeightedAutomaton a;
    std::vector<std::string> names;
    for (size_t i = 0; i < letters; ++i) names.push_back(std::string(1, char('a' + i)));
    a.alphabet = Alphabet(names);
    a.dim = dim(rng);
    a.initial.resize(a.dim);
    a.final.resize(a.dim);
    for (auto& v : a.initial) v = entry();
    for (auto& v : a.final) v = entry();
    for (size_t s = 0; s < letters; ++s) {
        MatrixQ m(a.dim, a.dim);
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j) m(i, j) = entry();
        a.transitions.push_back(std::move(m));
    }
    return a;
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

}  // namespace

TEST_CASE("alphabets index their letters") {
    const Alphabet ab({"a", "b"});
    CHECK(ab.size() == 2);
    CHECK(ab.index_of("a") == 0);
    CHECK(ab.index_of("b") == 1);
    CHECK_FALSE(ab.index_of("c"));
    CHECK(ab.single_char_letters());

    const Alphabet tokens({"aa", "b"});
    CHECK_FALSE(tokens.single_char_letters());

    CHECK_THROWS_AS(Alphabet({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet({""}), std::invalid_argument);
}

TEST_CASE("word parsing and formatting") {
    const Alphabet ab({"a", "b"});
    CHECK(parse_word(ab, "").empty());
    CHECK(parse_word(ab, "eps").empty());
    CHECK(parse_word(ab, "ab") == word({0, 1}));
    CHECK(parse_word(ab, "a b a") == word({0, 1, 0}));
    CHECK(parse_word(ab, "b,b") == word({1, 1}));
    CHECK_THROWS_AS(parse_word(ab, "ac"), UnknownLetterError);
    CHECK(format_word(ab, word({0, 1, 0})) == "aba");
    CHECK(format_word(ab, {}) == "eps");

    const Alphabet tokens({"aa", "b"});
    CHECK(parse_word(tokens, "aa") == word({0}));
    CHECK(parse_word(tokens, "aa b aa") == word({0, 1, 0}));
    CHECK(format_word(tokens, word({0, 1})) == "aa b");
}

TEST_CASE("Q-weighted evaluation matches the mod-2 program") {
    const QWeightedAutomaton p1 = load_q("program1.json");
    CHECK(eval(p1, {}) == Rational(2));
    CHECK(eval(p1, repeat(0, 1)) == Rational(1));
    for (size_t k = 0; k <= 8; ++k)
        CHECK(eval(p1, repeat(0, k)) == Rational(k % 2 == 0 ? 2 : 1));
    CHECK_THROWS_AS(eval(p1, word({1})), UnknownLetterError);
}

TEST_CASE("Q-weighted evaluation matches the Fibonacci recurrence") {
    const QWeightedAutomaton fib = load_q("fibonacci.json");
    CHECK(eval(fib, repeat(0, 4)) == Rational(8));
    // f(a^k) = F_{k+1} with F_0 = F_1 = 1.
    Rational prev(1), cur(1);
    for (size_t k = 0; k <= 9; ++k) {
        CHECK(eval(fib, repeat(0, k)) == cur);
        const Rational next = cur + prev;
        prev = cur;
        cur = next;
    }
}

TEST_CASE("P-finite evaluation matches the factorial program") {
    const PFiniteAutomaton p3 = load_p("program3.json");
    const uint32_t a = 0, b = 1;
    CHECK(eval(p3, word({a, b})) == Rational(6));  // 3!
    CHECK(eval(p3, word({a, a})) == Rational(0));
    CHECK(eval(p3, word({b})) == Rational(2));
    CHECK(eval(p3, {}) == Rational(0));
    // (|w|+1)! when the number of b's is odd, 0 otherwise.
    for (const auto& w : all_words(2, 5)) {
        size_t bs = 0;
        for (uint32_t s : w) bs += (s == b);
        Rational expect(0);
        if (bs % 2 == 1) {
            expect = Rational(1);
            for (size_t i = 2; i <= w.size() + 1; ++i) expect = expect * Rational(Int(i));
        }
        CHECK(eval(p3, w) == expect);
    }
}

TEST_CASE("P-finite evaluation matches the involution recurrence") {
    const PFiniteAutomaton inv = load_p("involutions.json");
    CHECK(eval(inv, repeat(0, 3)) == Rational(10));
    // f(a^k) = I_{k+1} with I_1 = 1, I_2 = 2, I_k = I_{k-1} + (k-1) I_{k-2}.
    std::vector<Rational> expected{1, 2, 4, 10, 26, 76, 232, 764};
    for (size_t k = 0; k < expected.size(); ++k) CHECK(eval(inv, repeat(0, k)) == expected[k]);
}

TEST_CASE("backward vectors follow the recursion") {
    const PFiniteAutomaton p3 = load_p("program3.json");
    const auto b_eps = backward_vector(p3, {});
    REQUIRE(b_eps.size() == 2);
    CHECK(b_eps[0].is_zero());
    CHECK(b_eps[1] == x);

    const auto b_b = backward_vector(p3, word({1}));
    CHECK(b_b[0] == x * (x + Poly(1)));
    CHECK(b_b[1].is_zero());

    // alpha . B(w)(1) recovers the evaluation, and each entry obeys the
    // degree bound d_max * (|w| + 1).
    const PFiniteAutomaton inv = load_p("involutions.json");
    for (const PFiniteAutomaton& m : {p3, inv}) {
        const int d_max = 1;
        for (const auto& w : all_words(static_cast<uint32_t>(m.alphabet.size()), 4)) {
            const auto bv = backward_vector(m, w);
            Rational got(0);
            for (size_t i = 0; i < m.dim; ++i) got += m.initial[i] * bv[i](Rational(1));
            CHECK(got == eval(m, w));
            for (const auto& p : bv) CHECK(p.degree() <= d_max * static_cast<int>(w.size() + 1));
        }
    }
}

TEST_CASE("difference subtracts pointwise") {
    const PFiniteAutomaton p3 = load_p("program3.json");
    const PFiniteAutomaton self_diff = difference(p3, p3);
    CHECK(self_diff.dim == p3.dim * 2);
    for (const auto& w : all_words(2, 5)) CHECK(eval(self_diff, w) == Rational(0));

    const QWeightedAutomaton fib = load_q("fibonacci.json");
    const QWeightedAutomaton zero = load_q("zero.json");
    const PFiniteAutomaton fib_minus_zero = difference(lift(fib), lift(zero));
    for (size_t k = 0; k <= 6; ++k)
        CHECK(eval(fib_minus_zero, repeat(0, k)) == eval(fib, repeat(0, k)));

    const QWeightedAutomaton qdiff = difference(fib, zero);
    CHECK(qdiff.dim == fib.dim + zero.dim);
    for (size_t k = 0; k <= 6; ++k) CHECK(eval(qdiff, repeat(0, k)) == eval(fib, repeat(0, k)));

    const PFiniteAutomaton inv = load_p("involutions.json");
    CHECK_THROWS_AS(difference(p3, inv), AlphabetMismatchError);
}

TEST_CASE("difference identity on random pairs") {
    std::mt19937 rng(4201);
    for (int trial = 0; trial < 25; ++trial) {
        const PFiniteAutomaton a = random_p_automaton(rng, 2);
        const PFiniteAutomaton b = random_p_automaton(rng, 2);
        const PFiniteAutomaton d = difference(a, b);
        for (const auto& w : all_words(2, 3)) CHECK(eval(d, w) == eval(a, w) - eval(b, w));
    }
}

TEST_CASE("lifting embeds Q-weighted automata") {
    const QWeightedAutomaton fib = load_q("fibonacci.json");
    const PFiniteAutomaton lifted = lift(fib);
    CHECK(lifted.dim == fib.dim);
    CHECK(eval(lifted, repeat(0, 4)) == Rational(8));

    const QWeightedAutomaton zero = load_q("zero.json");
    for (size_t k = 0; k <= 4; ++k) CHECK(eval(lift(zero), repeat(0, k)) == Rational(0));

    std::mt19937 rng(4202);
    for (int trial = 0; trial < 25; ++trial) {
        const QWeightedAutomaton a = random_q_automaton(rng, 2);
        const PFiniteAutomaton la = lift(a);
        for (const auto& w : all_words(2, 3)) CHECK(eval(la, w) == eval(a, w));
    }
}

TEST_CASE("constant P-finite automata convert back to Q-weighted") {
    const QWeightedAutomaton fib = load_q("fibonacci.json");
    const auto back = as_q_automaton(lift(fib));
    REQUIRE(back);
    for (size_t k = 0; k <= 6; ++k) CHECK(eval(*back, repeat(0, k)) == eval(fib, repeat(0, k)));

    CHECK_FALSE(as_q_automaton(load_p("involutions.json")));
}

TEST_CASE("integrality check for Z-weighted automata") {
    CHECK(as_z_automaton(load_q("fibonacci.json")));
    CHECK_FALSE(as_z_automaton(load_q("program1.json")));  // contains 1/2
    CHECK(as_z_automaton(load_q("zero.json")));

    const auto z = as_z_automaton(load_q("fibonacci.json"));
    CHECK(eval(z->base(), repeat(0, 4)) == Rational(8));
}

TEST_CASE("dimension zero evaluates to zero") {
    QWeightedAutomaton q;
    q.alphabet = Alphabet({"a"});
    q.transitions.resize(1, MatrixQ(0, 0));
    q.validate();
    CHECK(eval(q, repeat(0, 3)) == Rational(0));

    PFiniteAutomaton p;
    p.alphabet = Alphabet({"a"});
    p.transitions.resize(1, MatrixPoly(0, 0));
    p.validate();
    CHECK(eval(p, {}) == Rational(0));
    CHECK(backward_vector(p, repeat(0, 2)).empty());
}

TEST_CASE("validation rejects inconsistent shapes") {
    QWeightedAutomaton q = load_q("fibonacci.json");
    q.initial.push_back(Rational(1));
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);

    QWeightedAutomaton missing = load_q("fibonacci.json");
    missing.transitions.clear();
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);

    PFiniteAutomaton p = load_p("program3.json");
    p.transitions[0] = MatrixPoly(1, 2);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
