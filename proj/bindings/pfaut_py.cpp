// Python bindings for the main operations: parsing/serializing automata,
// exact evaluation, the zeroness/equivalence/Z-valuedness decisions,
// minimization, and the exact learner. Automata of all three kinds hide
// behind one wrapper class; rationals cross the boundary as
// fractions.Fraction and words as strings in the CLI syntax ("abba",
// "eps", or space/comma-separated letter names).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "pfaut/errors.hpp"
#include "pfaut/learning.hpp"
#include "pfaut/pfinite_decision.hpp"
#include "pfaut/serialization.hpp"
#include "pfaut/z_fatou.hpp"

namespace py = pybind11;
using namespace pfaut;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

struct PyAutomaton {
    AnyAutomaton inner;

    std::string kind() const { return kind_name(inner); }
    size_t dim() const {
        return std::visit(
            [](const auto& a) {
                if constexpr (std::is_same_v<std::decay_t<decltype(a)>, ZWeightedAutomaton>)
                    return a.base().dim;
                else
                    return a.dim;
            },
            inner);
    }
    std::vector<std::string> letters() const {
        const Alphabet& al = alphabet_of(inner);
        std::vector<std::string> out;
        for (size_t i = 0; i < al.size(); ++i) out.push_back(al.letter(i));
        return out;
    }
    py::object evaluate(const std::string& word) const {
        return to_fraction(eval(inner, parse_word(alphabet_of(inner), word)));
    }
    std::string text() const { return serialize(inner); }
};

PyAutomaton load_py(const std::string& path) { return {load_automaton(path)}; }
PyAutomaton parse_py(const std::string& text) { return {parse_automaton(text)}; }

std::optional<std::string> zeroness_py(const PyAutomaton& a) {
    const auto w = zeroness_witness(to_p_finite(a.inner));
    if (!w) return std::nullopt;
    return format_word(alphabet_of(a.inner), *w);
}

std::optional<std::string> equivalence_py(const PyAutomaton& a, const PyAutomaton& b) {
    const auto w = equivalence_witness(to_p_finite(a.inner), to_p_finite(b.inner));
    if (!w) return std::nullopt;
    return format_word(alphabet_of(a.inner), *w);
}

// Z-valued input -> the equivalent z-weighted automaton; otherwise the
// witness word whose value is not an integer.
py::object compute_z_py(const PyAutomaton& a) {
    const auto q = to_q_weighted(a.inner);
    if (!q) throw ParseError("compute_z needs a q-weighted automaton (constant entries)");
    auto out = compute_z(*q);
    if (auto* w = std::get_if<Word>(&out))
        return py::cast(format_word(alphabet_of(a.inner), *w));
    return py::cast(PyAutomaton{std::get<ZWeightedAutomaton>(std::move(out))});
}

PyAutomaton minimize_py(const PyAutomaton& a) {
    const auto q = to_q_weighted(a.inner);
    if (!q) throw ParseError("minimize needs a q-weighted automaton (constant entries)");
    return {minimize(*q)};
}

PyAutomaton learn_py(const PyAutomaton& target, bool z_mode,
                     std::optional<size_t> max_queries) {
    SimulatedTeacher teacher(to_p_finite(target.inner));
    LearningSession session(teacher, max_queries);
    if (z_mode) return {learn_z(session)};
    return {exact_learner(session)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact decision procedures and learning for weighted automata";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnknownLetterError>(m, "UnknownLetterError", PyExc_ValueError);
    py::register_exception<AlphabetMismatchError>(m, "AlphabetMismatchError", PyExc_ValueError);
    py::register_exception<TargetNotIntegerError>(m, "TargetNotIntegerError", PyExc_ValueError);
    py::register_exception<QueryBudgetExceededError>(m, "QueryBudgetExceededError",
                                                     PyExc_RuntimeError);

    py::class_<PyAutomaton>(m, "Automaton")
        .def_property_readonly("kind", &PyAutomaton::kind,
                               "\"q-weighted\", \"z-weighted\", or \"p-finite\"")
        .def_property_readonly("dim", &PyAutomaton::dim, "number of states")
        .def_property_readonly("alphabet", &PyAutomaton::letters, "letter names in order")
        .def("eval", &PyAutomaton::evaluate, py::arg("word"),
             "exact value of the word as a Fraction")
        .def("serialize", &PyAutomaton::text, "canonical JSON text")
        .def("save", [](const PyAutomaton& a, const std::string& path) {
                 save_automaton(a.inner, path);
             },
             py::arg("path"))
        .def("__repr__", [](const PyAutomaton& a) {
            return "<Automaton kind=" + a.kind() + " dim=" + std::to_string(a.dim()) + ">";
        });

    m.def("load", &load_py, py::arg("path"), "parse an automaton from a JSON file");
    m.def("parse", &parse_py, py::arg("text"), "parse an automaton from JSON text");
    m.def("zeroness", &zeroness_py, py::arg("automaton"),
          "None when the automaton is identically zero, else a word with a nonzero value");
    m.def("equivalence", &equivalence_py, py::arg("left"), py::arg("right"),
          "None when the automata agree on every word, else a word separating them");
    m.def("compute_z", &compute_z_py, py::arg("automaton"),
          "an equivalent z-weighted Automaton, or a witness word with a non-integer value");
    m.def("minimize", &minimize_py, py::arg("automaton"),
          "minimal equivalent q-weighted automaton");
    m.def("learn", &learn_py, py::arg("target"), py::kw_only(), py::arg("z_mode") = false,
          py::arg("max_queries") = std::nullopt,
          "learn the target from a simulated teacher; z_mode learns a z-weighted automaton");
}
