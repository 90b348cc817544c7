// pfaut: exact toolkit for Q-/Z-weighted and P-finite (polynomial-weighted)
// automata. Subcommands load automata from JSON files, evaluate words,
// decide zeroness/equivalence/Z-valuedness, minimize, stream unary
// sequences, and run recorded learning sessions against a simulated
// teacher. Every witness that gets printed is first re-verified by direct
// evaluation; a failure there is an internal error (exit 70).
//
// Exit codes: 0 success/equivalent/zero, 1 witness outcome, 2 parse or
// input-domain error, 3 unknown letter, 4 non-unary alphabet for seq,
// 5 query budget exceeded, 70 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfaut/learning.hpp"
#include "pfaut/pfinite_decision.hpp"
#include "pfaut/serialization.hpp"
#include "pfaut/z_fatou.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pfaut;

constexpr int kExitWitness = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownLetter = 3;
constexpr int kExitNonUnary = 4;
constexpr int kExitQueryBudget = 5;
constexpr int kExitInternal = 70;

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string file, file2, word_text;
    std::string output, transcript;
    size_t count = 0;
    long long max_queries = -1;  // negative: unlimited
    bool z_mode = false;
};

size_t dimension_of(const AnyAutomaton& a) {
    return std::visit(
        [](const auto& inner) {
            if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, ZWeightedAutomaton>)
                return inner.base().dim;
            else
                return inner.dim;
        },
        a);
}

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.json)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

// Writes an automaton to opt.output, or to stdout when no path was given
// (suppressed in --json mode, where it is already embedded in the object).
void emit_automaton(const Options& opt, const AnyAutomaton& a) {
    if (!opt.output.empty())
        save_automaton(a, opt.output);
    else if (!opt.json)
        std::cout << serialize(a);
}

int cmd_eval(const Options& opt) {
    const AnyAutomaton a = load_automaton(opt.file);
    const Word w = parse_word(alphabet_of(a), opt.word_text);
    const Rational value = eval(a, w);
    emit(opt, {{"word", format_word(alphabet_of(a), w)}, {"value", value.str()}},
         value.str() + "\n");
    return 0;
}

int cmd_equiv(const Options& opt) {
    const AnyAutomaton a = load_automaton(opt.file);
    const AnyAutomaton b = load_automaton(opt.file2);
    const auto witness = equivalence_witness(to_p_finite(a), to_p_finite(b));
    if (!witness) {
        emit(opt, {{"equivalent", true}}, "equivalent\n");
        return 0;
    }
    const Rational left = eval(a, *witness), right = eval(b, *witness);
    if (left == right) throw InternalError("equivalence witness failed re-verification");
    const std::string text = format_word(alphabet_of(a), *witness);
    emit(opt,
         {{"equivalent", false},
          {"witness", text},
          {"left", left.str()},
          {"right", right.str()}},
         "witness: " + text + "\nleft: " + left.str() + "\nright: " + right.str() + "\n");
    return kExitWitness;
}

int cmd_zeroness(const Options& opt) {
    const AnyAutomaton a = load_automaton(opt.file);
    const auto witness = zeroness_witness(to_p_finite(a));
    if (!witness) {
        emit(opt, {{"zero", true}}, "zero\n");
        return 0;
    }
    const Rational value = eval(a, *witness);
    if (value.is_zero()) throw InternalError("zeroness witness failed re-verification");
    const std::string text = format_word(alphabet_of(a), *witness);
    emit(opt, {{"zero", false}, {"witness", text}, {"value", value.str()}},
         "witness: " + text + "\nvalue: " + value.str() + "\n");
    return kExitWitness;
}

int cmd_to_z(const Options& opt) {
    const AnyAutomaton a = load_automaton(opt.file);
    const auto q = to_q_weighted(a);
    if (!q) throw ParseError("to-z needs a q-weighted automaton (constant entries)");
    auto z = compute_z(*q);
    if (const auto* witness = std::get_if<Word>(&z)) {
        const Rational value = eval(*q, *witness);
        if (value.is_integer()) throw InternalError("non-integer witness failed re-verification");
        const std::string text = format_word(q->alphabet, *witness);
        emit(opt, {{"z_valued", false}, {"witness", text}, {"value", value.str()}},
             "witness: " + text + "\nvalue: " + value.str() + "\n");
        return kExitWitness;
    }
    const AnyAutomaton out = std::get<ZWeightedAutomaton>(std::move(z));
    emit_automaton(opt, out);
    if (opt.json)
        std::cout << json({{"z_valued", true}, {"automaton", json::parse(serialize(out))}}).dump(2)
                  << "\n";
    return 0;
}

int cmd_minimize(const Options& opt) {
    const AnyAutomaton a = load_automaton(opt.file);
    const auto q = to_q_weighted(a);
    if (!q) throw ParseError("minimize needs a q-weighted automaton (constant entries)");
    const AnyAutomaton out = minimize(*q);
    emit_automaton(opt, out);
    if (opt.json)
        std::cout << json({{"dimension", std::get<QWeightedAutomaton>(out).dim},
                           {"automaton", json::parse(serialize(out))}})
                         .dump(2)
                  << "\n";
    return 0;
}

int cmd_seq(const Options& opt) {
    const AnyAutomaton any = load_automaton(opt.file);
    if (alphabet_of(any).size() != 1) {
        std::cerr << "error: seq requires a unary alphabet, got "
                  << alphabet_of(any).size() << " letters\n";
        return kExitNonUnary;
    }
    const PFiniteAutomaton a = to_p_finite(any);
    // Incremental forward pass: term k is x_k . beta(k+1), then
    // x_{k+1} = x_k . mu(a, k+1).
    std::vector<Rational> x = a.initial;
    json terms = json::array();
    for (size_t k = 0; k < opt.count; ++k) {
        const Rational at(static_cast<long>(k + 1));
        Rational term(0);
        for (size_t i = 0; i < a.dim; ++i) term += x[i] * a.final[i](at);
        if (opt.json)
            terms.push_back(term.str());
        else
            std::cout << term.str() << "\n";
        if (k + 1 < opt.count) {
            MatrixQ m(a.dim, a.dim);
            for (size_t i = 0; i < a.dim; ++i)
                for (size_t j = 0; j < a.dim; ++j) m(i, j) = a.transitions[0](i, j)(at);
            x = row_times_matrix(x, m);
        }
    }
    if (opt.json) std::cout << json({{"terms", std::move(terms)}}).dump(2) << "\n";
    return 0;
}

int cmd_learn(const Options& opt) {
    const AnyAutomaton target = load_automaton(opt.file);
    SimulatedTeacher teacher(to_p_finite(target));
    std::optional<size_t> budget;
    if (opt.max_queries >= 0) budget = static_cast<size_t>(opt.max_queries);
    LearningSession session(teacher, budget);

    AnyAutomaton learned = opt.z_mode ? AnyAutomaton(learn_z(session))
                                      : AnyAutomaton(exact_learner(session));
    const SessionReport& report = session.report();

    emit_automaton(opt, learned);
    if (!opt.transcript.empty()) {
        std::ofstream out(opt.transcript);
        if (!out) throw ParseError("cannot write file: " + opt.transcript);
        out << serialize_report(report, alphabet_of(learned), learned);
    }
    if (opt.json) {
        std::cout << json({{"automaton", json::parse(serialize(learned))},
                           {"membership_count", report.membership_count},
                           {"equivalence_count", report.equivalence_count},
                           {"max_counterexample_length", report.max_counterexample_length},
                           {"wall_time_seconds", report.wall_time_seconds}})
                         .dump(2)
                  << "\n";
    } else {
        std::cerr << "learned a dimension-" << dimension_of(learned) << " "
                  << kind_name(learned) << " automaton with " << report.membership_count
                  << " membership and " << report.equivalence_count << " equivalence queries\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Q-/Z-weighted and P-finite automata"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an automaton on a word");
    eval_cmd->add_option("file", opt.file, "automaton JSON file")->required();
    eval_cmd->add_option("word", opt.word_text, "word over the alphabet (\"eps\" for empty)")
        ->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two automata");
    equiv_cmd->add_option("file1", opt.file, "first automaton")->required();
    equiv_cmd->add_option("file2", opt.file2, "second automaton")->required();

    auto* zero_cmd = app.add_subcommand("zeroness", "decide whether the automaton is zero");
    zero_cmd->add_option("file", opt.file, "automaton JSON file")->required();

    auto* toz_cmd = app.add_subcommand("to-z", "decide Z-valuedness; emit a Z-weighted automaton");
    toz_cmd->add_option("file", opt.file, "q-weighted automaton file")->required();
    toz_cmd->add_option("-o,--output", opt.output, "write the automaton here instead of stdout");

    auto* min_cmd = app.add_subcommand("minimize", "minimal equivalent q-weighted automaton");
    min_cmd->add_option("file", opt.file, "q-weighted automaton file")->required();
    min_cmd->add_option("-o,--output", opt.output, "write the automaton here instead of stdout");

    auto* seq_cmd = app.add_subcommand("seq", "stream the sequence of a unary automaton");
    seq_cmd->add_option("file", opt.file, "unary-alphabet automaton file")->required();
    seq_cmd->add_option("--count", opt.count, "number of terms")->required();

    auto* learn_cmd = app.add_subcommand("learn", "learn an automaton from a simulated teacher");
    learn_cmd->add_option("--target", opt.file, "hidden target automaton file")->required();
    learn_cmd->add_flag("--z-mode", opt.z_mode, "learn a Z-weighted automaton (target must be Z-valued)");
    learn_cmd->add_option("--max-queries", opt.max_queries,
                          "abort with exit 5 after this many queries");
    learn_cmd->add_option("--transcript", opt.transcript, "write the session report here");
    learn_cmd->add_option("-o,--output", opt.output, "write the automaton here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return cmd_eval(opt);
        if (equiv_cmd->parsed()) return cmd_equiv(opt);
        if (zero_cmd->parsed()) return cmd_zeroness(opt);
        if (toz_cmd->parsed()) return cmd_to_z(opt);
        if (min_cmd->parsed()) return cmd_minimize(opt);
        if (seq_cmd->parsed()) return cmd_seq(opt);
        if (learn_cmd->parsed()) return cmd_learn(opt);
    } catch (const UnknownLetterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownLetter;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const AlphabetMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const TargetNotIntegerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const QueryBudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitQueryBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
