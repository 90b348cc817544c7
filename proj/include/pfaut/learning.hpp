#pragma once

// Exact learning of P-finite automata from a minimally adequate teacher:
// membership queries return exact values, equivalence queries return a
// counterexample or accept. The learner maintains an observation table
// over row words R and totally suffix-closed column words C (both seeded
// with eps), solves for position-dependent transition polynomials through
// the stacked Hankel matrix, and grows the table from the largest correct
// prefix of each counterexample. The outer loop enumerates guesses for the
// target's dimension and degree along diagonals, so it terminates for any
// learnable target without knowing either bound in advance.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "pfaut/automaton.hpp"

namespace pfaut {

class Teacher {
  public:
    virtual ~Teacher() = default;
    virtual const Alphabet& alphabet() const = 0;
    virtual Rational membership(const Word& w) = 0;
    // Counterexample, or nullopt when the hypothesis is equivalent.
    virtual std::optional<Word> equivalence(const PFiniteAutomaton& hypothesis) = 0;
};

// Teacher backed by a hidden automaton; equivalence runs the exact
// decision procedure, so returned counterexamples are always genuine.
class SimulatedTeacher : public Teacher {
  public:
    explicit SimulatedTeacher(PFiniteAutomaton target) : target_(std::move(target)) {}
    const Alphabet& alphabet() const override { return target_.alphabet; }
    Rational membership(const Word& w) override;
    std::optional<Word> equivalence(const PFiniteAutomaton& hypothesis) override;

    const PFiniteAutomaton& target() const { return target_; }
    size_t membership_calls() const { return membership_calls_; }
    size_t equivalence_calls() const { return equivalence_calls_; }

  private:
    PFiniteAutomaton target_;
    size_t membership_calls_ = 0;
    size_t equivalence_calls_ = 0;
};

struct TranscriptEvent {
    enum class Kind { membership, equivalence, row_added, column_added };
    Kind kind;
    Word word;                              // membership / row-added / column-added
    Rational answer;                        // membership
    size_t hypothesis_dim = 0;              // equivalence
    std::optional<Word> counterexample;     // equivalence
};

// Observation table addresses: the cached answers live in the session.
struct HankelTable {
    std::vector<Word> rows;     // R, eps first
    std::vector<Word> columns;  // C, eps first, totally suffix-closed
};

// Statistics of one partial_learner attempt, for post-hoc invariant checks.
struct RunStats {
    size_t n_guess = 0;  // dimension guess
    size_t d_guess = 0;  // degree guess d_max
    Int budget = 0;      // ell
    bool succeeded = false;
    bool timed_out = false;
    size_t calls = 0;  // loop iterations, the initial call included
    size_t max_rows = 0;
    size_t max_columns = 0;
    std::vector<bool> zero_fallback;      // per call: table was all zero
    std::vector<bool> rank_invariant;     // per call: rank(A^(d)) == |R|
    std::vector<Word> added_columns;      // column words in addition order
    std::vector<size_t> counterexample_lengths;
};

struct SessionReport {
    size_t membership_count = 0;
    size_t equivalence_count = 0;
    size_t max_counterexample_length = 0;
    double wall_time_seconds = 0.0;
    std::vector<TranscriptEvent> transcript;
    std::vector<RunStats> runs;
};

// One learning session: owns the permanent membership cache, the
// transcript, the query counters and the optional query budget. All oracle
// traffic is routed through here, so cache hits never count as queries and
// the counters always match the transcript.
class LearningSession {
  public:
    explicit LearningSession(Teacher& teacher, std::optional<size_t> query_budget = std::nullopt)
        : teacher_(teacher), budget_(query_budget),
          start_(std::chrono::steady_clock::now()) {}

    const Alphabet& alphabet() const { return teacher_.alphabet(); }
    Rational membership(const Word& w);
    std::optional<Word> equivalence(const PFiniteAutomaton& hypothesis);

    void log_row_added(const Word& w);
    void log_column_added(const Word& w);
    void stamp_wall_time();

    SessionReport& report() { return report_; }
    const SessionReport& report() const { return report_; }

  private:
    void charge();

    Teacher& teacher_;
    std::optional<size_t> budget_;
    std::map<Word, Rational> cache_;
    SessionReport report_;
    std::chrono::steady_clock::time_point start_;
};

// H_{R,C}: entry (i, j) is f(r_i . c_j), fetched through the session.
MatrixQ hankel_matrix(LearningSession& session, const HankelTable& table);

// The stacked matrix [Delta^0 H | Delta^1 H | ... | Delta^d H] with
// Delta = diag(|r_i| + 1): column k*|C|+j of block k scales H's column j
// by (|r_i|+1)^k.
MatrixQ stacked_matrix(LearningSession& session, const HankelTable& table, size_t d);

// Solves A^(d) Y = H_{R,sC} for every letter s and assembles the
// hypothesis (row_C(eps), mu, e_1) of dimension |C|; free variables are 0.
// When the whole table is zero, returns the canonical zero hypothesis
// (alpha = 0, mu = 0, beta = e_1) without solving. Throws NotDClosedError
// when some column has no solution.
PFiniteAutomaton build_hypothesis(LearningSession& session, const HankelTable& table, size_t d);

struct PrefixSplit {
    Word prefix;          // u: hypothesis correct on u
    uint32_t letter;      // s: first letter after u
    size_t column_index;  // j: column c_j exposing the mismatch on u.s
};

// Walks the counterexample left to right, comparing the hypothesis row
// against membership answers column by column; returns the first mismatch.
// Throws NoIncorrectPrefixError when the scan never finds one.
PrefixSplit largest_correct_prefix(LearningSession& session, const PFiniteAutomaton& hypothesis,
                                   const std::vector<Word>& columns, const Word& counterexample);

using EquivalenceOracle = std::function<std::optional<Word>(const PFiniteAutomaton&)>;

// One table-growing attempt with degree guess d_max and column budget ell:
// returns the certified hypothesis, or nullopt once |C| exceeds ell. The
// equivalence oracle defaults to the session's teacher; learn_z substitutes
// its integrality-filtering wrapper.
std::optional<PFiniteAutomaton> partial_learner(LearningSession& session, size_t d_max,
                                                const Int& ell, RunStats* stats = nullptr,
                                                const EquivalenceOracle& equivalence = {});

// Diagonal enumeration of (dimension, degree) guesses with the budget
// ell = 2 (d+1)^n n^(2n); the first successful attempt wins. Total for
// valid teachers.
PFiniteAutomaton exact_learner(LearningSession& session);

// Learner for Z-valued targets: the degree-0 learner whose hypotheses are
// passed through compute_z, so the teacher only ever receives Z-weighted
// hypotheses; a non-integer witness is itself a counterexample. The final
// hypothesis passes through compute_z as well, which makes the result the
// minimal Z-weighted automaton. Throws TargetNotIntegerError when the
// hidden target turns out not to be Z-valued.
ZWeightedAutomaton learn_z(LearningSession& session);

// Diagnostic used by the row-count bound: the (s+1)-block row vector with
// alpha * mu(u, 1) in block |u| and zeros elsewhere. Throws
// LengthExceededError when |u| > s.
std::vector<Rational> bounded_forward_vector(const PFiniteAutomaton& a, const Word& u, size_t s);

}  // namespace pfaut
