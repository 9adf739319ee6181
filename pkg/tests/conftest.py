from pathlib import Path

import pytest
from hypothesis import strategies as st

from adfsolve import Adf, And, Atom, Const, Iff, Imp, Neg, Or, ThreeValued, TwoValued, Vocabulary, Xor
from adfsolve.parsing import parse_adf

INSTANCES = Path(__file__).resolve().parent.parent / "instances"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def load(name: str) -> Adf:
    return parse_adf((INSTANCES / f"{name}.adf").read_text())


@pytest.fixture(scope="session")
def running() -> Adf:
    return load("running")


@pytest.fixture(scope="session")
def attack() -> Adf:
    return load("mutual_attack")


@pytest.fixture(scope="session")
def selfloop() -> Adf:
    return load("selfloop")


def interp(adf: Adf, **values: str) -> ThreeValued:
    """``interp(adf, a="t", b="u")``; statements not named are undefined."""
    return ThreeValued.from_values(adf.vocab, values)


def two(adf: Adf, *trues: str) -> TwoValued:
    return TwoValued.of(adf.vocab, trues)


def formulas(parents: list[int]) -> st.SearchStrategy:
    leaves = st.builds(Const, st.booleans())
    if parents:
        leaves = st.one_of(st.sampled_from([Atom(p) for p in parents]), leaves)
    return st.recursive(
        leaves,
        lambda ch: st.one_of(
            st.builds(Neg, ch), st.builds(And, ch, ch), st.builds(Or, ch, ch),
            st.builds(Imp, ch, ch), st.builds(Iff, ch, ch), st.builds(Xor, ch, ch),
        ),
        max_leaves=6,
    )


@st.composite
def adfs(draw, max_n: int = 4, min_n: int = 1) -> Adf:
    n = draw(st.integers(min_n, max_n))
    pairs = st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
    links = frozenset(draw(st.sets(pairs, max_size=n * n))) if n else frozenset()
    conds = []
    for s in range(n):
        plist = sorted(b for b, t in links if t == s)
        conds.append(draw(formulas(plist)))
    vocab = Vocabulary(tuple("abcdefgh"[:n]))
    return Adf(vocab, tuple(conds), links)


@st.composite
def three_valued(draw, vocab: Vocabulary) -> ThreeValued:
    n = len(vocab)
    defined = draw(st.integers(0, (1 << n) - 1))
    trues = draw(st.integers(0, (1 << n) - 1)) & defined
    return ThreeValued(vocab, defined, trues)


@st.composite
def adf_and_interp(draw, max_n: int = 4):
    adf = draw(adfs(max_n=max_n))
    return adf, draw(three_valued(adf.vocab))
