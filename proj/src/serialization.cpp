#include "pfaut/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pfaut {
namespace {

using json = nlohmann::ordered_json;

Rational parse_rational_entry(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a rational string");
    const auto text = j.get<std::string>();
    const auto r = Rational::parse(text);
    if (!r) throw ParseError(where + ": not a rational: \"" + text + "\"");
    return *r;
}

Poly parse_poly_entry(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a coefficient array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (size_t k = 0; k < j.size(); ++k)
        coeffs.push_back(parse_rational_entry(j[k], where + "[" + std::to_string(k) + "]"));
    return Poly(std::move(coeffs));
}

json rational_json(const Rational& r) { return r.str(); }

json poly_json(const Poly& p) {
    json arr = json::array();
    if (p.is_zero()) {
        arr.push_back("0");
        return arr;
    }
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

// Parses a dimension x dimension grid, one callback per validated cell.
template <typename ParseCell>
void parse_grid(const json& j, size_t dim, const std::string& where, ParseCell&& cell) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    for (size_t i = 0; i < dim; ++i) {
        if (!j[i].is_array() || j[i].size() != dim)
            throw ParseError(where + " row " + std::to_string(i) + ": expected " +
                             std::to_string(dim) + " entries");
        for (size_t k = 0; k < dim; ++k)
            cell(i, k, j[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
}

template <typename ParseEntry>
auto parse_vector(const json& j, size_t dim, const std::string& where, ParseEntry&& entry) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(where + ": expected " + std::to_string(dim) + " entries");
    std::vector<decltype(entry(j[0], where))> out;
    out.reserve(dim);
    for (size_t k = 0; k < dim; ++k)
        out.push_back(entry(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

json automaton_object(const std::string& kind, const Alphabet& alphabet, size_t dim,
                      json initial, json transitions, json final) {
    json j;
    j["kind"] = kind;
    j["alphabet"] = alphabet.letters();
    j["dimension"] = dim;
    j["initial"] = std::move(initial);
    j["transitions"] = std::move(transitions);
    j["final"] = std::move(final);
    return j;
}

json q_object(const QWeightedAutomaton& a, const std::string& kind) {
    json initial = json::array();
    for (const auto& v : a.initial) initial.push_back(rational_json(v));
    json transitions = json::object();
    for (size_t s = 0; s < a.alphabet.size(); ++s) {
        json grid = json::array();
        for (size_t i = 0; i < a.dim; ++i) {
            json row = json::array();
            for (size_t k = 0; k < a.dim; ++k) row.push_back(rational_json(a.transitions[s](i, k)));
            grid.push_back(std::move(row));
        }
        transitions[a.alphabet.letter(s)] = std::move(grid);
    }
    json final = json::array();
    for (const auto& v : a.final) final.push_back(rational_json(v));
    return automaton_object(kind, a.alphabet, a.dim, std::move(initial), std::move(transitions),
                            std::move(final));
}

json p_object(const PFiniteAutomaton& a) {
    json initial = json::array();
    for (const auto& v : a.initial) initial.push_back(rational_json(v));
    json transitions = json::object();
    for (size_t s = 0; s < a.alphabet.size(); ++s) {
        json grid = json::array();
        for (size_t i = 0; i < a.dim; ++i) {
            json row = json::array();
            for (size_t k = 0; k < a.dim; ++k) row.push_back(poly_json(a.transitions[s](i, k)));
            grid.push_back(std::move(row));
        }
        transitions[a.alphabet.letter(s)] = std::move(grid);
    }
    json final = json::array();
    for (const auto& v : a.final) final.push_back(poly_json(v));
    return automaton_object("p-finite", a.alphabet, a.dim, std::move(initial),
                            std::move(transitions), std::move(final));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string word_text(const Alphabet& alphabet, const Word& w) {
    return format_word(alphabet, w);
}

}  // namespace

AnyAutomaton parse_automaton(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    for (const char* key : {"kind", "alphabet", "dimension", "initial", "transitions", "final"})
        if (!j.contains(key)) throw ParseError(std::string("missing field: ") + key);

    if (!j["kind"].is_string()) throw ParseError("kind: expected a string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "q-weighted" && kind != "z-weighted" && kind != "p-finite")
        throw ParseError("kind: unknown kind \"" + kind + "\"");

    if (!j["alphabet"].is_array()) throw ParseError("alphabet: expected an array of letters");
    std::vector<std::string> letters;
    for (const auto& l : j["alphabet"]) {
        if (!l.is_string()) throw ParseError("alphabet: letters must be strings");
        letters.push_back(l.get<std::string>());
    }
    Alphabet alphabet;
    try {
        alphabet = Alphabet(std::move(letters));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("alphabet: ") + e.what());
    }

    if (!j["dimension"].is_number_unsigned())
        throw ParseError("dimension: expected a non-negative integer");
    const size_t dim = j["dimension"].get<size_t>();

    if (!j["transitions"].is_object()) throw ParseError("transitions: expected an object");
    for (const auto& item : j["transitions"].items())
        if (!alphabet.index_of(item.key()))
            throw ParseError("transitions: letter \"" + item.key() + "\" is not in the alphabet");
    for (const auto& letter : alphabet.letters())
        if (!j["transitions"].contains(letter))
            throw ParseError("transitions: missing letter \"" + letter + "\"");

    const auto initial = parse_vector(j["initial"], dim, "initial", [](const json& e, const std::string& w) {
        return parse_rational_entry(e, w);
    });

    if (kind == "p-finite") {
        PFiniteAutomaton a;
        a.alphabet = alphabet;
        a.dim = dim;
        a.initial = initial;
        for (const auto& letter : alphabet.letters()) {
            MatrixPoly m(dim, dim);
            parse_grid(j["transitions"][letter], dim, "transitions." + letter,
                       [&](size_t i, size_t k, const json& e, const std::string& w) {
                           m(i, k) = parse_poly_entry(e, w);
                       });
            a.transitions.push_back(std::move(m));
        }
        a.final = parse_vector(j["final"], dim, "final", [](const json& e, const std::string& w) {
            return parse_poly_entry(e, w);
        });
        return a;
    }

    QWeightedAutomaton a;
    a.alphabet = alphabet;
    a.dim = dim;
    a.initial = initial;
    for (const auto& letter : alphabet.letters()) {
        MatrixQ m(dim, dim);
        parse_grid(j["transitions"][letter], dim, "transitions." + letter,
                   [&](size_t i, size_t k, const json& e, const std::string& w) {
                       m(i, k) = parse_rational_entry(e, w);
                   });
        a.transitions.push_back(std::move(m));
    }
    a.final = parse_vector(j["final"], dim, "final", [](const json& e, const std::string& w) {
        return parse_rational_entry(e, w);
    });

    if (kind == "q-weighted") return a;
    const auto z = as_z_automaton(a);
    if (!z) throw ParseError("z-weighted file has a non-integer entry");
    return *z;
}

AnyAutomaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

std::string serialize(const QWeightedAutomaton& a) { return dump(q_object(a, "q-weighted")); }
std::string serialize(const ZWeightedAutomaton& a) {
    return dump(q_object(a.base(), "z-weighted"));
}
std::string serialize(const PFiniteAutomaton& a) { return dump(p_object(a)); }

std::string serialize(const AnyAutomaton& a) {
    return std::visit([](const auto& inner) { return serialize(inner); }, a);
}

void save_automaton(const AnyAutomaton& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << serialize(a);
}

const Alphabet& alphabet_of(const AnyAutomaton& a) {
    return std::visit(
        [](const auto& inner) -> const Alphabet& {
            if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, ZWeightedAutomaton>)
                return inner.base().alphabet;
            else
                return inner.alphabet;
        },
        a);
}

std::string kind_name(const AnyAutomaton& a) {
    switch (a.index()) {
        case 0: return "q-weighted";
        case 1: return "z-weighted";
        default: return "p-finite";
    }
}

Rational eval(const AnyAutomaton& a, const Word& w) {
    return std::visit(
        [&](const auto& inner) {
            if constexpr (std::is_same_v<std::decay_t<decltype(inner)>, ZWeightedAutomaton>)
                return eval(inner.base(), w);
            else
                return eval(inner, w);
        },
        a);
}

PFiniteAutomaton to_p_finite(const AnyAutomaton& a) {
    return std::visit(
        [](const auto& inner) {
            using T = std::decay_t<decltype(inner)>;
            if constexpr (std::is_same_v<T, QWeightedAutomaton>)
                return lift(inner);
            else if constexpr (std::is_same_v<T, ZWeightedAutomaton>)
                return lift(inner.base());
            else
                return inner;
        },
        a);
}

std::optional<QWeightedAutomaton> to_q_weighted(const AnyAutomaton& a) {
    return std::visit(
        [](const auto& inner) -> std::optional<QWeightedAutomaton> {
            using T = std::decay_t<decltype(inner)>;
            if constexpr (std::is_same_v<T, QWeightedAutomaton>)
                return inner;
            else if constexpr (std::is_same_v<T, ZWeightedAutomaton>)
                return inner.base();
            else
                return as_q_automaton(inner);
        },
        a);
}

std::string serialize_report(const SessionReport& report, const Alphabet& alphabet,
                             const AnyAutomaton& learned) {
    json j;
    j["learned"] = json::parse(serialize(learned));
    j["membership_count"] = report.membership_count;
    j["equivalence_count"] = report.equivalence_count;
    j["max_counterexample_length"] = report.max_counterexample_length;
    j["wall_time_seconds"] = report.wall_time_seconds;

    json transcript = json::array();
    for (const auto& ev : report.transcript) {
        json e;
        switch (ev.kind) {
            case TranscriptEvent::Kind::membership:
                e["type"] = "membership";
                e["word"] = word_text(alphabet, ev.word);
                e["answer"] = ev.answer.str();
                break;
            case TranscriptEvent::Kind::equivalence:
                e["type"] = "equivalence";
                e["hypothesis_dimension"] = ev.hypothesis_dim;
                if (ev.counterexample)
                    e["counterexample"] = word_text(alphabet, *ev.counterexample);
                else
                    e["counterexample"] = nullptr;
                break;
            case TranscriptEvent::Kind::row_added:
                e["type"] = "row-added";
                e["word"] = word_text(alphabet, ev.word);
                break;
            case TranscriptEvent::Kind::column_added:
                e["type"] = "column-added";
                e["word"] = word_text(alphabet, ev.word);
                break;
        }
        transcript.push_back(std::move(e));
    }
    j["transcript"] = std::move(transcript);

    json runs = json::array();
    for (const auto& run : report.runs) {
        json r;
        r["dimension_guess"] = run.n_guess;
        r["degree_guess"] = run.d_guess;
        r["column_budget"] = run.budget.get_str();
        r["succeeded"] = run.succeeded;
        r["timed_out"] = run.timed_out;
        r["calls"] = run.calls;
        r["max_rows"] = run.max_rows;
        r["max_columns"] = run.max_columns;
        json lens = json::array();
        for (size_t n : run.counterexample_lengths) lens.push_back(n);
        r["counterexample_lengths"] = std::move(lens);
        runs.push_back(std::move(r));
    }
    j["runs"] = std::move(runs);
    return dump(j);
}

}  // namespace pfaut
