#pragma once

// JSON persistence for the three automaton kinds and for learning-session
// reports. One schema covers all kinds: {kind, alphabet, dimension,
// initial, transitions, final}. Rationals are strings "p" or "p/q";
// polynomials are arrays of rational strings in ascending degree (["0","1"]
// is x). Q- and Z-weighted files differ only by the kind tag, which turns
// on integrality validation. Serialization is canonical: two-space indent,
// fields in schema order, transition letters in declared alphabet order,
// so parse-then-serialize is the identity on canonical files.

#include <optional>
#include <string>
#include <variant>

#include "pfaut/automaton.hpp"
#include "pfaut/learning.hpp"

namespace pfaut {

using AnyAutomaton = std::variant<QWeightedAutomaton, ZWeightedAutomaton, PFiniteAutomaton>;

// Throws ParseError on malformed JSON, schema violations, ragged grids,
// non-integer entries in a z-weighted file, or an unreadable path.
AnyAutomaton parse_automaton(const std::string& json_text);
AnyAutomaton load_automaton(const std::string& path);

std::string serialize(const QWeightedAutomaton& a);
std::string serialize(const ZWeightedAutomaton& a);
std::string serialize(const PFiniteAutomaton& a);
std::string serialize(const AnyAutomaton& a);
void save_automaton(const AnyAutomaton& a, const std::string& path);

const Alphabet& alphabet_of(const AnyAutomaton& a);
std::string kind_name(const AnyAutomaton& a);
Rational eval(const AnyAutomaton& a, const Word& w);

// Embeds any kind into the common p-finite model (semantics preserved).
PFiniteAutomaton to_p_finite(const AnyAutomaton& a);
// Down-conversion: q-weighted as is, z-weighted unwrapped, p-finite only
// when every entry is constant.
std::optional<QWeightedAutomaton> to_q_weighted(const AnyAutomaton& a);

// Session report with the learned automaton embedded; words are formatted
// through the alphabet ("eps" for the empty word).
std::string serialize_report(const SessionReport& report, const Alphabet& alphabet,
                             const AnyAutomaton& learned);

}  // namespace pfaut
