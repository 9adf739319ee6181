"""Decision procedures and enumeration for the ADF semantics."""

from __future__ import annotations

import enum
from typing import Iterator

from .config import DEFAULT_LIMITS, Limits
from .core import (
    BOTTOM, Adf, Atom, Interpretation, ThreeValued, TwoValued, Vocabulary, bits, map_atoms,
    subsets, validate,
)
from .errors import AdfError, CapExceeded, NotAModel
from .operators import apply_G, gamma, leq_i


class Semantics(enum.Enum):
    MODEL = "mod"
    STABLE = "stb"
    ADMISSIBLE = "adm"
    COMPLETE = "com"
    PREFERRED = "prf"
    GROUNDED = "grd"

    @property
    def two_valued(self) -> bool:
        return self in (Semantics.MODEL, Semantics.STABLE)


def _two(w: Interpretation) -> TwoValued | None:
    if isinstance(w, TwoValued):
        return w
    return w.to_two() if w.is_two_valued else None


def is_model(adf: Adf, w: Interpretation) -> bool:
    w2 = _two(w)
    return w2 is not None and apply_G(adf, w2).trues == w2.trues


def is_admissible(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    return leq_i(v, gamma(adf, v, limits=limits))


def is_complete(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    return gamma(adf, v, limits=limits) == v.as_three()


def kleene_grounded(adf: Adf, *, limits: Limits = DEFAULT_LIMITS) -> tuple[ThreeValued, int]:
    """Iterate Γ from the all-undefined interpretation; returns (fixpoint, Γ applications)."""
    v = ThreeValued.undefined(adf.vocab)
    steps = 0
    while True:
        nxt = gamma(adf, v, limits=limits)
        steps += 1
        if nxt == v:
            return v, steps
        if not leq_i(v, nxt):
            raise AdfError("Γ iteration left the information chain")
        v = nxt


def grounded(adf: Adf, *, limits: Limits = DEFAULT_LIMITS) -> ThreeValued:
    return kleene_grounded(adf, limits=limits)[0]


def is_grounded(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    return grounded(adf, limits=limits) == v.as_three()


def _strict_extensions(v: ThreeValued) -> Iterator[ThreeValued]:
    undef = v.undefined_mask
    for extra in subsets(undef):
        if not extra:
            continue
        for t in subsets(extra):
            yield ThreeValued(v.vocab, v.defined | extra, v.trues | t)


def is_preferred(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    v3 = v.as_three()
    k = bin(v3.undefined_mask).count("1")
    if k > limits.max_enum_three:
        raise CapExceeded(f"{k} undefined statements to extend (cap {limits.max_enum_three})")
    if not is_admissible(adf, v3, limits=limits):
        return False
    return not any(is_admissible(adf, u, limits=limits) for u in _strict_extensions(v3))


def reduct(adf: Adf, w: Interpretation) -> Adf:
    """Sub-ADF over the true statements of model ``w``; false atoms become falsum."""
    w2 = _two(w)
    if w2 is None or not is_model(adf, w2):
        raise NotAModel(f"{w} is not a two-valued model")
    keep = list(bits(w2.trues))
    new = {old: i for i, old in enumerate(keep)}
    vocab = Vocabulary(tuple(adf.vocab.names[i] for i in keep))

    def sub(a: int):
        return Atom(new[a]) if a in new else BOTTOM

    conds = tuple(map_atoms(adf.conditions[s], sub) for s in keep)
    links = frozenset((new[a], new[b]) for a, b in adf.links if a in new and b in new)
    out = Adf(vocab, conds, links)
    diags = validate(out)
    if diags:  # substitution only removes atoms, so this would be a bug
        raise AdfError(f"reduct failed validation: {diags}")
    return out


def is_stable(adf: Adf, w: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Model whose reduct's grounded interpretation makes every remaining statement true."""
    if not is_model(adf, w):
        return False
    red = reduct(adf, w)
    g = grounded(red, limits=limits)
    return g.trues == red.vocab.full


def all_two_valued(vocab: Vocabulary, *, limits: Limits = DEFAULT_LIMITS) -> Iterator[TwoValued]:
    if len(vocab) > limits.max_enum_two:
        raise CapExceeded(f"{len(vocab)} statements exceed the two-valued scan cap {limits.max_enum_two}")
    for m in range(1 << len(vocab)):
        yield TwoValued(vocab, m)


def all_three_valued(vocab: Vocabulary, *, limits: Limits = DEFAULT_LIMITS) -> Iterator[ThreeValued]:
    if len(vocab) > limits.max_enum_three:
        raise CapExceeded(
            f"{len(vocab)} statements exceed the three-valued scan cap {limits.max_enum_three}")
    for d in range(1 << len(vocab)):
        for t in subsets(d):
            yield ThreeValued(vocab, d, t)


def maximal(items: list[ThreeValued]) -> list[ThreeValued]:
    """≤_i-maximal elements of ``items``."""
    by_size = sorted(items, key=lambda v: -bin(v.defined).count("1"))
    out: list[ThreeValued] = []
    for v in by_size:
        # a strictly larger element defines strictly more statements, so it was seen already
        if not any(leq_i(v, u) for u in out):
            out.append(v)
    return out


def preferred_via_complete(adf: Adf, *, limits: Limits = DEFAULT_LIMITS) -> list[ThreeValued]:
    """Shortcut: the ≤_i-maximal complete interpretations."""
    comp = [v for v in all_three_valued(adf.vocab, limits=limits) if is_complete(adf, v, limits=limits)]
    return sort_interpretations(maximal(comp))


def sort_interpretations(vs) -> list[ThreeValued]:
    return sorted((v.as_three() for v in vs), key=ThreeValued.sort_key)


def enumerate_semantics(adf: Adf, sem: Semantics | str,
                        *, limits: Limits = DEFAULT_LIMITS) -> list[ThreeValued]:
    """All interpretations of ``adf`` under ``sem``.

    Ordered by number of defined statements (descending), then
    lexicographically in statement order with t < f < u.
    """
    sem = Semantics(sem)
    if sem is Semantics.GROUNDED:
        return [grounded(adf, limits=limits)]
    if sem.two_valued:
        if len(adf.vocab) > limits.max_enum_two:
            raise CapExceeded(
                f"{len(adf.vocab)} statements exceed the two-valued scan cap {limits.max_enum_two}")
        models = [w for w in all_two_valued(adf.vocab, limits=limits) if is_model(adf, w)]
        if sem is Semantics.STABLE:
            models = [w for w in models if is_stable(adf, w, limits=limits)]
        return sort_interpretations(models)
    adm = [v for v in all_three_valued(adf.vocab, limits=limits)
           if is_admissible(adf, v, limits=limits)]
    if sem is Semantics.ADMISSIBLE:
        return sort_interpretations(adm)
    if sem is Semantics.COMPLETE:
        return sort_interpretations(v for v in adm if is_complete(adf, v, limits=limits))
    return sort_interpretations(maximal(adm))


def holds(adf: Adf, sem: Semantics | str, v: Interpretation,
          *, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Membership test of ``v`` in the ``sem`` interpretations of ``adf``."""
    sem = Semantics(sem)
    if sem is Semantics.MODEL:
        return is_model(adf, v)
    if sem is Semantics.STABLE:
        return is_stable(adf, v, limits=limits)
    if sem is Semantics.ADMISSIBLE:
        return is_admissible(adf, v, limits=limits)
    if sem is Semantics.COMPLETE:
        return is_complete(adf, v, limits=limits)
    if sem is Semantics.PREFERRED:
        return is_preferred(adf, v, limits=limits)
    return is_grounded(adf, v, limits=limits)
