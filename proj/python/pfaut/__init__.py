"""Exact decision procedures and learning for weighted automata.

Thin re-export of the native module: automata are parsed from JSON,
evaluated exactly (values are fractions.Fraction), and fed to the
zeroness / equivalence / compute_z decisions, minimization, and the
exact learner.
"""

from ._core import (
    AlphabetMismatchError,
    Automaton,
    ParseError,
    QueryBudgetExceededError,
    TargetNotIntegerError,
    UnknownLetterError,
    compute_z,
    equivalence,
    learn,
    load,
    minimize,
    parse,
    zeroness,
)

__all__ = [
    "AlphabetMismatchError",
    "Automaton",
    "ParseError",
    "QueryBudgetExceededError",
    "TargetNotIntegerError",
    "UnknownLetterError",
    "compute_z",
    "equivalence",
    "learn",
    "load",
    "minimize",
    "parse",
    "zeroness",
]
