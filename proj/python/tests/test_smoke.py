"""Smoke tests for the python bindings against the shipped fixtures."""

import os
from fractions import Fraction
from pathlib import Path

import pytest

import pfaut

FIXTURES = Path(os.environ["PFAUT_FIXTURE_DIR"])


def fixture(name: str) -> pfaut.Automaton:
    return pfaut.load(str(FIXTURES / name))


def test_load_and_eval():
    fib = fixture("fibonacci.json")
    assert fib.kind == "q-weighted"
    assert fib.dim == 2
    assert fib.alphabet == ["a"]
    assert [fib.eval("a" * k) for k in range(8)] == [1, 2, 3, 5, 8, 13, 21, 34]
    assert fib.eval("eps") == 1

    half = fixture("half.json")
    assert half.eval("aaa") == Fraction(1, 8)


def test_round_trip(tmp_path):
    src = FIXTURES / "program3.json"
    aut = pfaut.parse(src.read_text())
    assert aut.serialize() == src.read_text()
    out = tmp_path / "copy.json"
    aut.save(str(out))
    assert out.read_text() == src.read_text()


def test_decisions():
    fib = fixture("fibonacci.json")
    zero = fixture("zero.json")
    assert pfaut.zeroness(zero) is None
    assert pfaut.zeroness(fib) == "eps"
    assert pfaut.equivalence(fib, fib) is None

    inv = fixture("involutions.json")
    w = pfaut.equivalence(fib, inv)
    assert w is not None
    assert fib.eval(w) != inv.eval(w)


def test_compute_z():
    z = pfaut.compute_z(fixture("program1.json"))
    assert isinstance(z, pfaut.Automaton)
    assert z.kind == "z-weighted"
    assert [z.eval("a" * k) for k in range(6)] == [2, 1, 2, 1, 2, 1]

    half = fixture("half.json")
    w = pfaut.compute_z(half)
    assert w == "a"
    assert half.eval(w) == Fraction(1, 2)


def test_minimize():
    fib = fixture("fibonacci.json")
    small = pfaut.minimize(fib)
    assert small.dim == 2
    assert pfaut.equivalence(small, fib) is None


def test_learn():
    inv = fixture("involutions.json")
    learned = pfaut.learn(inv)
    assert learned.kind == "p-finite"
    assert pfaut.equivalence(learned, inv) is None

    z = pfaut.learn(fixture("fibonacci.json"), z_mode=True)
    assert z.kind == "z-weighted"
    assert z.eval("aaaa") == 8

    with pytest.raises(pfaut.TargetNotIntegerError):
        pfaut.learn(fixture("half.json"), z_mode=True)

    with pytest.raises(pfaut.QueryBudgetExceededError):
        pfaut.learn(fixture("program3.json"), max_queries=3)


def test_errors():
    with pytest.raises(pfaut.ParseError):
        pfaut.parse("{}")
    with pytest.raises(pfaut.UnknownLetterError):
        fixture("fibonacci.json").eval("b")
