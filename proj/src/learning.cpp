#include "pfaut/learning.hpp"

#include <algorithm>

#include "pfaut/linalg.hpp"
#include "pfaut/pfinite_decision.hpp"
#include "pfaut/z_fatou.hpp"

namespace pfaut {
namespace {

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

MatrixQ eval_matrix(const MatrixPoly& m, const Rational& at) {
    MatrixQ out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)(at);
    return out;
}

Int pow_int(unsigned long base, unsigned long exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace

Rational SimulatedTeacher::membership(const Word& w) {
    ++membership_calls_;
    return eval(target_, w);
}

std::optional<Word> SimulatedTeacher::equivalence(const PFiniteAutomaton& hypothesis) {
    ++equivalence_calls_;
    return equivalence_witness(target_, hypothesis);
}

void LearningSession::charge() {
    if (!budget_) return;
    if (report_.membership_count + report_.equivalence_count >= *budget_)
        throw QueryBudgetExceededError(*budget_);
}

Rational LearningSession::membership(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    charge();
    const Rational answer = teacher_.membership(w);
    cache_.emplace(w, answer);
    ++report_.membership_count;
    TranscriptEvent ev;
    ev.kind = TranscriptEvent::Kind::membership;
    ev.word = w;
    ev.answer = answer;
    report_.transcript.push_back(std::move(ev));
    return answer;
}

std::optional<Word> LearningSession::equivalence(const PFiniteAutomaton& hypothesis) {
    charge();
    const std::optional<Word> cex = teacher_.equivalence(hypothesis);
    ++report_.equivalence_count;
    TranscriptEvent ev;
    ev.kind = TranscriptEvent::Kind::equivalence;
    ev.hypothesis_dim = hypothesis.dim;
    ev.counterexample = cex;
    report_.transcript.push_back(std::move(ev));
    if (cex) report_.max_counterexample_length =
                 std::max(report_.max_counterexample_length, cex->size());
    return cex;
}

void LearningSession::log_row_added(const Word& w) {
    TranscriptEvent ev;
    ev.kind = TranscriptEvent::Kind::row_added;
    ev.word = w;
    report_.transcript.push_back(std::move(ev));
}

void LearningSession::log_column_added(const Word& w) {
    TranscriptEvent ev;
    ev.kind = TranscriptEvent::Kind::column_added;
    ev.word = w;
    report_.transcript.push_back(std::move(ev));
}

void LearningSession::stamp_wall_time() {
    report_.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
}

MatrixQ hankel_matrix(LearningSession& session, const HankelTable& table) {
    MatrixQ h(table.rows.size(), table.columns.size());
    for (size_t i = 0; i < table.rows.size(); ++i)
        for (size_t j = 0; j < table.columns.size(); ++j)
            h(i, j) = session.membership(concat(table.rows[i], table.columns[j]));
    return h;
}

MatrixQ stacked_matrix(LearningSession& session, const HankelTable& table, size_t d) {
    const MatrixQ h = hankel_matrix(session, table);
    const size_t m = h.rows(), n = h.cols();
    MatrixQ a(m, (d + 1) * n);
    for (size_t i = 0; i < m; ++i) {
        const Rational delta(static_cast<long>(table.rows[i].size() + 1));
        Rational power(1);
        for (size_t k = 0; k <= d; ++k) {
            for (size_t j = 0; j < n; ++j) a(i, k * n + j) = power * h(i, j);
            power *= delta;
        }
    }
    return a;
}

PFiniteAutomaton build_hypothesis(LearningSession& session, const HankelTable& table, size_t d) {
    const size_t n = table.columns.size();
    const MatrixQ h = hankel_matrix(session, table);

    PFiniteAutomaton hyp;
    hyp.alphabet = session.alphabet();
    hyp.dim = n;
    hyp.final.assign(n, Poly());
    hyp.final[0] = Poly(1);

    bool all_zero = true;
    for (size_t i = 0; i < h.rows() && all_zero; ++i)
        for (size_t j = 0; j < n && all_zero; ++j)
            if (!h(i, j).is_zero()) all_zero = false;
    if (all_zero) {
        // Zero seed table: the canonical zero hypothesis, no solving.
        hyp.initial.assign(n, Rational(0));
        hyp.transitions.assign(hyp.alphabet.size(), MatrixPoly(n, n));
        return hyp;
    }

    hyp.initial = h.row(0);  // row_C(eps); rows[0] == eps by construction
    const MatrixQ a = stacked_matrix(session, table, d);
    for (uint32_t s = 0; s < hyp.alphabet.size(); ++s) {
        MatrixPoly mu(n, n);
        for (size_t j = 0; j < n; ++j) {
            // Column j of H_{R,sC}: f(r_i . s . c_j).
            std::vector<Rational> rhs(table.rows.size());
            for (size_t i = 0; i < table.rows.size(); ++i) {
                Word w = table.rows[i];
                w.push_back(s);
                rhs[i] = session.membership(concat(w, table.columns[j]));
            }
            const auto y = solve(a, rhs);
            if (!y)
                throw NotDClosedError("no degree-" + std::to_string(d) +
                                      " transition solves column " + std::to_string(j));
            for (size_t i = 0; i < n; ++i) {
                std::vector<Rational> coeffs(d + 1);
                for (size_t k = 0; k <= d; ++k) coeffs[k] = (*y)[k * n + i];
                mu(i, j) = Poly(std::move(coeffs));
            }
        }
        hyp.transitions.push_back(std::move(mu));
    }
    return hyp;
}

PrefixSplit largest_correct_prefix(LearningSession& session, const PFiniteAutomaton& hypothesis,
                                   const std::vector<Word>& columns, const Word& counterexample) {
    std::vector<Rational> x = hypothesis.initial;
    Word prefix;
    for (size_t pos = 0; pos < counterexample.size(); ++pos) {
        const uint32_t s = counterexample[pos];
        x = row_times_matrix(
            x, eval_matrix(hypothesis.transitions[s], Rational(static_cast<long>(pos + 1))));
        Word extended = prefix;
        extended.push_back(s);
        for (size_t j = 0; j < columns.size(); ++j) {
            const Rational answer = session.membership(concat(extended, columns[j]));
            if (x[j] != answer) return {std::move(prefix), s, j};
        }
        prefix = std::move(extended);
    }
    throw NoIncorrectPrefixError();
}

std::optional<PFiniteAutomaton> partial_learner(LearningSession& session, size_t d_max,
                                                const Int& ell, RunStats* stats,
                                                const EquivalenceOracle& equivalence) {
    HankelTable table;
    table.rows.push_back({});
    table.columns.push_back({});

    while (true) {
        if (ell < static_cast<unsigned long>(table.columns.size())) {
            if (stats) stats->timed_out = true;
            return std::nullopt;
        }
        // Past the budget check, every iteration builds a hypothesis and
        // spends one equivalence query, so calls == queries per run.
        if (stats) {
            ++stats->calls;
            stats->max_rows = std::max(stats->max_rows, table.rows.size());
            stats->max_columns = std::max(stats->max_columns, table.columns.size());
        }
        const size_t d = d_max * (table.columns.size() + 1) * table.columns.size();
        if (stats) {
            const MatrixQ h = hankel_matrix(session, table);
            bool zero = true;
            for (size_t i = 0; i < h.rows() && zero; ++i)
                for (size_t j = 0; j < h.cols() && zero; ++j)
                    if (!h(i, j).is_zero()) zero = false;
            stats->zero_fallback.push_back(zero);
            stats->rank_invariant.push_back(rank(stacked_matrix(session, table, d)) ==
                                            table.rows.size());
        }

        const PFiniteAutomaton hyp = build_hypothesis(session, table, d);
        const std::optional<Word> cex =
            equivalence ? equivalence(hyp) : session.equivalence(hyp);
        if (!cex) {
            if (stats) stats->succeeded = true;
            return hyp;
        }
        if (stats) stats->counterexample_lengths.push_back(cex->size());

        const PrefixSplit split = largest_correct_prefix(session, hyp, table.columns, *cex);
        Word column = table.columns[split.column_index];
        column.insert(column.begin(), split.letter);

        const bool duplicate_row =
            std::find(table.rows.begin(), table.rows.end(), split.prefix) != table.rows.end();
        if (duplicate_row) {
            // Possible only in the zero-table regime, where closedness was
            // never enforced by a solve; adding the row again would wedge
            // the rank invariant, so only the column is added.
            table.columns.push_back(column);
            session.log_column_added(table.columns.back());
            if (stats) stats->added_columns.push_back(table.columns.back());
            continue;
        }

        table.rows.push_back(split.prefix);
        session.log_row_added(split.prefix);
        const bool full_rank =
            rank(stacked_matrix(session, table, d)) == table.rows.size();
        if (!full_rank) {
            table.columns.push_back(column);
            session.log_column_added(table.columns.back());
            if (stats) stats->added_columns.push_back(table.columns.back());
        }
    }
}

PFiniteAutomaton exact_learner(LearningSession& session) {
    for (unsigned long sum = 1;; ++sum) {
        for (unsigned long n = 1; n <= sum; ++n) {
            const unsigned long d = sum - n;
            const Int ell = 2 * pow_int(d + 1, n) * pow_int(n, 2 * n);
            RunStats stats;
            stats.n_guess = n;
            stats.d_guess = d;
            stats.budget = ell;
            auto result = partial_learner(session, d, ell, &stats);
            session.report().runs.push_back(std::move(stats));
            if (result) {
                session.stamp_wall_time();
                return *result;
            }
        }
    }
}

ZWeightedAutomaton learn_z(LearningSession& session) {
    // Wraps the real oracle: hypotheses go through compute_z first, so a
    // non-integer value yields a local counterexample and the teacher only
    // ever sees Z-weighted hypotheses.
    const EquivalenceOracle z_equivalence = [&](const PFiniteAutomaton& hyp) {
        const auto qa = as_q_automaton(hyp);
        if (!qa) throw std::logic_error("degree-0 learner built a non-constant hypothesis");
        auto z = compute_z(*qa);
        if (auto* w = std::get_if<Word>(&z)) {
            if (session.membership(*w) == eval(*qa, *w))
                throw TargetNotIntegerError("target agrees with a non-integer hypothesis value on "
                                            + format_word(hyp.alphabet, *w));
            return std::optional<Word>(*w);
        }
        return session.equivalence(lift(std::get<ZWeightedAutomaton>(z).base()));
    };

    for (unsigned long n = 1;; ++n) {
        const Int ell = 2 * pow_int(n, 2 * n);
        RunStats stats;
        stats.n_guess = n;
        stats.d_guess = 0;
        stats.budget = ell;
        auto result = partial_learner(session, 0, ell, &stats, z_equivalence);
        session.report().runs.push_back(std::move(stats));
        if (result) {
            auto z = compute_z(*as_q_automaton(*result));
            if (auto* w = std::get_if<Word>(&z))
                throw TargetNotIntegerError("certified hypothesis is not Z-valued at " +
                                            format_word(result->alphabet, *w));
            session.stamp_wall_time();
            return std::get<ZWeightedAutomaton>(std::move(z));
        }
    }
}

std::vector<Rational> bounded_forward_vector(const PFiniteAutomaton& a, const Word& u, size_t s) {
    if (u.size() > s) throw LengthExceededError();
    std::vector<Rational> x = a.initial;
    for (size_t k = 0; k < u.size(); ++k)
        x = row_times_matrix(x, eval_matrix(a.transitions[u[k]], Rational(static_cast<long>(k + 1))));
    std::vector<Rational> out((s + 1) * a.dim);
    for (size_t i = 0; i < a.dim; ++i) out[u.size() * a.dim + i] = x[i];
    return out;
}

}  // namespace pfaut
