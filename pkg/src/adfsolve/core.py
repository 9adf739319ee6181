"""Domain types: vocabularies, acceptance-condition formulas, ADFs and interpretations.

Interpretations are bitsets over statement indices: bit ``i`` of ``trues`` is
set iff statement ``i`` is true. A three-valued interpretation carries a second
bitset ``defined``; statements outside it are undefined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import AdfError, CapExceeded, ValidationError

TRUTH_TABLE_PARENT_CAP = 20


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def subsets(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, starting with 0 and ending with ``mask``."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    line: int | None = None
    column: int | None = None
    statement: str | None = None
    kind: str | None = None

    def __str__(self) -> str:
        where = f"{self.line}:{self.column}: " if self.line is not None else ""
        return f"{where}{self.severity}: {self.message}"


@dataclass(frozen=True)
class Vocabulary:
    """Ordered set of statement names; declaration order is the iteration order."""

    names: tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if any(not isinstance(n, str) or not n for n in names):
            raise AdfError("statement names must be non-empty strings")
        index = {n: i for i, n in enumerate(names)}
        if len(index) != len(names):
            raise AdfError("statement names must be unique")
        object.__setattr__(self, "index", index)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.index

    @property
    def full(self) -> int:
        return (1 << len(self.names)) - 1

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for n in names:
            m |= 1 << self.index[n]
        return m

    def names_of(self, mask: int) -> list[str]:
        return [self.names[i] for i in bits(mask)]


# -- formulas ---------------------------------------------------------------


class Formula:
    """Propositional acceptance condition; atoms are statement indices."""

    __slots__ = ()

    def value(self, w: int) -> bool:
        raise NotImplementedError

    def atoms(self) -> int:
        """Bitmask of the statements occurring in the formula."""
        raise NotImplementedError

    def size(self) -> int:
        raise NotImplementedError

    def children(self) -> tuple[Formula, ...]:
        return ()


@dataclass(frozen=True, slots=True)
class Const(Formula):
    val: bool

    def value(self, w: int) -> bool:
        return self.val

    def atoms(self) -> int:
        return 0

    def size(self) -> int:
        return 1


TOP = Const(True)
BOTTOM = Const(False)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    index: int

    def value(self, w: int) -> bool:
        return bool(w >> self.index & 1)

    def atoms(self) -> int:
        return 1 << self.index

    def size(self) -> int:
        return 1


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    arg: Formula

    def value(self, w: int) -> bool:
        return not self.arg.value(w)

    def atoms(self) -> int:
        return self.arg.atoms()

    def size(self) -> int:
        return 1 + self.arg.size()

    def children(self) -> tuple[Formula, ...]:
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class _Binary(Formula):
    left: Formula
    right: Formula

    def atoms(self) -> int:
        return self.left.atoms() | self.right.atoms()

    def size(self) -> int:
        return 1 + self.left.size() + self.right.size()

    def children(self) -> tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class And(_Binary):
    def value(self, w: int) -> bool:
        return self.left.value(w) and self.right.value(w)


@dataclass(frozen=True, slots=True)
class Or(_Binary):
    def value(self, w: int) -> bool:
        return self.left.value(w) or self.right.value(w)


@dataclass(frozen=True, slots=True)
class Imp(_Binary):
    def value(self, w: int) -> bool:
        return not self.left.value(w) or self.right.value(w)


@dataclass(frozen=True, slots=True)
class Iff(_Binary):
    def value(self, w: int) -> bool:
        return self.left.value(w) == self.right.value(w)


@dataclass(frozen=True, slots=True)
class Xor(_Binary):
    def value(self, w: int) -> bool:
        return self.left.value(w) != self.right.value(w)


BINARY_OPS: dict[str, type[_Binary]] = {
    "and": And, "or": Or, "imp": Imp, "iff": Iff, "xor": Xor,
}

_INT_OPS = {
    And: "({} & {})",
    Or: "({} | {})",
    Imp: "((1 ^ {}) | {})",
    Iff: "(1 ^ {} ^ {})",
    Xor: "({} ^ {})",
}


def _int_expr(f: Formula) -> str:
    if isinstance(f, Const):
        return "1" if f.val else "0"
    if isinstance(f, Atom):
        return f"(w >> {f.index} & 1)"
    if isinstance(f, Neg):
        return f"(1 ^ {_int_expr(f.arg)})"
    return _INT_OPS[type(f)].format(_int_expr(f.left), _int_expr(f.right))


def compile_formula(f: Formula) -> Callable[[int], int]:
    """Return a fast evaluator ``w -> 0/1`` equivalent to ``f.value``."""
    try:
        return eval(f"lambda w: {_int_expr(f)}")  # noqa: S307 - generated from the AST
    except (RecursionError, MemoryError, SyntaxError):
        return lambda w: int(f.value(w))


def map_atoms(f: Formula, fn: Callable[[int], Formula]) -> Formula:
    """Rebuild ``f`` with every ``Atom(i)`` replaced by ``fn(i)``."""
    if isinstance(f, Atom):
        return fn(f.index)
    if isinstance(f, Const):
        return f
    if isinstance(f, Neg):
        return Neg(map_atoms(f.arg, fn))
    return type(f)(map_atoms(f.left, fn), map_atoms(f.right, fn))


def conjunction(parts: Sequence[Formula]) -> Formula:
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disjunction(parts: Sequence[Formula]) -> Formula:
    if not parts:
        return BOTTOM
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


# -- interpretations --------------------------------------------------------


@dataclass(frozen=True)
class ThreeValued:
    """Three-valued interpretation as the pair (defined, trues) with trues ⊆ defined ⊆ S."""

    vocab: Vocabulary
    defined: int
    trues: int

    def __post_init__(self) -> None:
        if self.defined & ~self.vocab.full or self.trues & ~self.defined:
            raise AdfError("three-valued interpretation must satisfy trues ⊆ defined ⊆ S")

    @classmethod
    def undefined(cls, vocab: Vocabulary) -> ThreeValued:
        return cls(vocab, 0, 0)

    @classmethod
    def from_values(cls, vocab: Vocabulary, values: Mapping[str, str]) -> ThreeValued:
        """Build from ``{name: 't'|'f'|'u'}``; unmentioned statements are undefined."""
        defined = trues = 0
        for name, val in values.items():
            bit = 1 << vocab.index[name]
            if val == "t":
                defined |= bit
                trues |= bit
            elif val == "f":
                defined |= bit
            elif val != "u":
                raise AdfError(f"unknown truth value {val!r}")
        return cls(vocab, defined, trues)

    @property
    def undefined_mask(self) -> int:
        return self.vocab.full & ~self.defined

    @property
    def is_two_valued(self) -> bool:
        return self.defined == self.vocab.full

    def value_of(self, i: int) -> str:
        if not self.defined >> i & 1:
            return "u"
        return "t" if self.trues >> i & 1 else "f"

    def values(self) -> dict[str, str]:
        return {n: self.value_of(i) for i, n in enumerate(self.vocab.names)}

    def to_two(self) -> TwoValued:
        if not self.is_two_valued:
            raise AdfError("interpretation has undefined statements")
        return TwoValued(self.vocab, self.trues)

    def as_three(self) -> ThreeValued:
        return self

    def sort_key(self) -> tuple:
        codes = "tfu"
        return (-bin(self.defined).count("1"),
                tuple(codes.index(self.value_of(i)) for i in range(len(self.vocab))))

    def __str__(self) -> str:
        return " ".join(f"{self.value_of(i)}({n})" for i, n in enumerate(self.vocab.names))


@dataclass(frozen=True)
class TwoValued:
    """Total interpretation S → {t, f}, stored as the set of true statements."""

    vocab: Vocabulary
    trues: int

    def __post_init__(self) -> None:
        if self.trues & ~self.vocab.full:
            raise AdfError("two-valued interpretation must satisfy trues ⊆ S")

    @classmethod
    def of(cls, vocab: Vocabulary, true_names: Iterable[str]) -> TwoValued:
        return cls(vocab, vocab.mask(true_names))

    @property
    def defined(self) -> int:
        return self.vocab.full

    def as_three(self) -> ThreeValued:
        return ThreeValued(self.vocab, self.vocab.full, self.trues)

    def __str__(self) -> str:
        return str(self.as_three())


Interpretation = Union[TwoValued, ThreeValued]


# -- ADFs -------------------------------------------------------------------


@dataclass(frozen=True)
class TruthTable:
    statement: int
    parent_list: tuple[int, ...]
    rows: dict[frozenset[int], bool]


@dataclass(frozen=True, eq=True)
class Adf:
    """An ADF (S, L, C); ``conditions[i]`` is the acceptance formula of statement ``i``."""

    vocab: Vocabulary
    conditions: tuple[Formula, ...]
    links: frozenset[tuple[int, int]]

    @classmethod
    def build(
        cls,
        statements: Sequence[str],
        conditions: Mapping[str, Formula] | Iterable[tuple[str, Formula]],
        links: Iterable[tuple[str, str]] | None = None,
    ) -> Adf:
        """Assemble an ADF from names; links default to those induced by formula atoms.

        Formulas must already use indices into ``statements`` order.
        Raises :class:`ValidationError` carrying every violation found.
        """
        vocab = Vocabulary(tuple(statements))
        pairs = list(conditions.items()) if isinstance(conditions, Mapping) else list(conditions)
        diags: list[Diagnostic] = []
        conds: list[Formula | None] = [None] * len(vocab)
        for name, f in pairs:
            if name not in vocab:
                diags.append(_diag(f"condition for undeclared statement {name}", name, "undeclared"))
                continue
            i = vocab.index[name]
            if conds[i] is not None:
                diags.append(_diag(f"duplicate condition for {name}", name, "duplicate"))
                continue
            conds[i] = f
        for i, f in enumerate(conds):
            if f is None:
                diags.append(_diag(f"missing condition for {vocab.names[i]}", vocab.names[i], "missing"))
        if links is None:
            link_set = frozenset(
                (a, i) for i, f in enumerate(conds) if f is not None for a in bits(f.atoms())
            )
        else:
            ls = set()
            for a, b in links:
                if a not in vocab or b not in vocab:
                    diags.append(_diag(f"link ({a},{b}) mentions an undeclared statement",
                                       b if a in vocab else a, "undeclared"))
                    continue
                ls.add((vocab.index[a], vocab.index[b]))
            link_set = frozenset(ls)
        if diags:
            raise ValidationError(diags)
        adf = cls(vocab, tuple(conds), link_set)  # type: ignore[arg-type]
        diags = validate(adf)
        if diags:
            raise ValidationError(diags)
        return adf

    @property
    def n(self) -> int:
        return len(self.vocab)

    @cached_property
    def parent_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.vocab)
        for a, b in self.links:
            if 0 <= b < len(masks):
                masks[b] |= 1 << a
        return tuple(masks)

    @cached_property
    def evaluators(self) -> tuple[Callable[[int], int], ...]:
        return tuple(compile_formula(f) for f in self.conditions)

    def condition(self, name: str) -> Formula:
        return self.conditions[self.vocab.index[name]]


def _diag(message: str, statement: str | None, kind: str) -> Diagnostic:
    return Diagnostic("error", message, statement=statement, kind=kind)


def parents(adf: Adf, s: int) -> frozenset[int]:
    """Parent indices of statement ``s``: every ``b`` with a link ``(b, s)``."""
    return frozenset(bits(adf.parent_masks[s]))


def eval_two(f: Formula, w: TwoValued | int) -> bool:
    """Classical evaluation of ``f`` under a two-valued interpretation."""
    return f.value(w if isinstance(w, int) else w.trues)


def validate(adf: Adf) -> list[Diagnostic]:
    """Return every well-formedness violation of ``adf``; an empty list means valid."""
    diags: list[Diagnostic] = []
    n = len(adf.vocab)
    names = adf.vocab.names
    if len(adf.conditions) != n:
        diags.append(_diag(
            f"expected {n} acceptance conditions, found {len(adf.conditions)}", None, "count"))
    for a, b in sorted(adf.links):
        if not (0 <= a < n and 0 <= b < n):
            diags.append(_diag(f"link ({a},{b}) relates an undeclared statement", None, "undeclared"))
    for i, f in enumerate(adf.conditions[:n]):
        if not isinstance(f, Formula):
            diags.append(_diag(f"missing condition for {names[i]}", names[i], "missing"))
            continue
        stray = f.atoms() & ~adf.parent_masks[i]
        for a in bits(stray):
            if a >= n:
                diags.append(_diag(f"atom #{a} in condition of {names[i]} is undeclared",
                                   names[i], "undeclared"))
            else:
                diags.append(_diag(f"atom {names[a]} not a parent of {names[i]}",
                                   names[i], "not-parent"))
    return diags


def truth_table(adf: Adf, s: int, *, max_parents: int = TRUTH_TABLE_PARENT_CAP) -> TruthTable:
    """Explicit acceptance function of ``s`` over the subsets of its parents."""
    plist = tuple(bits(adf.parent_masks[s]))
    if len(plist) > max_parents:
        raise CapExceeded(
            f"statement {adf.vocab.names[s]} has {len(plist)} parents (cap {max_parents})")
    f = adf.conditions[s]
    rows: dict[frozenset[int], bool] = {}
    for sub in subsets(adf.parent_masks[s]):
        rows[frozenset(bits(sub))] = eval_two(f, sub)
    return TruthTable(s, plist, rows)


def formula_from_table(table: TruthTable) -> Formula:
    """DNF over the parents with one disjunct per accepted row."""
    disjuncts = []
    for row in sorted(table.rows, key=lambda r: sorted(r)):
        if table.rows[row]:
            lits = [Atom(p) if p in row else Neg(Atom(p)) for p in table.parent_list]
            disjuncts.append(conjunction(lits))
    return disjunction(disjuncts)
