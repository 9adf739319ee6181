"""Definition-literal brute force used to cross-check the optimized code paths.

Nothing here is fast on purpose. Γ enumerates the full completion set over
*every* undefined statement, interpretations are built from explicit value
maps, and the grounded interpretation is found as the least complete one by
scanning, not by iteration.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .config import DEFAULT_LIMITS, Limits
from .core import BOTTOM, Adf, Atom, Interpretation, ThreeValued, TwoValued, Vocabulary, map_atoms
from .errors import AdfError, CapExceeded
from .semantics import Semantics, sort_interpretations


def enum_all_two(vocab: Vocabulary, *, limits: Limits = DEFAULT_LIMITS) -> Iterator[TwoValued]:
    if len(vocab) > limits.max_enum_two:
        raise CapExceeded(f"{len(vocab)} statements exceed the two-valued scan cap")
    for vals in itertools.product((True, False), repeat=len(vocab)):
        yield TwoValued.of(vocab, [n for n, x in zip(vocab.names, vals) if x])


def enum_all_three(vocab: Vocabulary, *, limits: Limits = DEFAULT_LIMITS) -> Iterator[ThreeValued]:
    if len(vocab) > limits.max_enum_three:
        raise CapExceeded(f"{len(vocab)} statements exceed the three-valued scan cap")
    for vals in itertools.product("tfu", repeat=len(vocab)):
        yield ThreeValued.from_values(vocab, dict(zip(vocab.names, vals)))


def _info_leq(a: ThreeValued, b: ThreeValued) -> bool:
    va, vb = a.values(), b.values()
    return all(vb[s] == x for s, x in va.items() if x != "u")


def completion_set(v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> list[TwoValued]:
    """Every two-valued interpretation at or above ``v`` in the information order."""
    vals = v.as_three().values()
    undef = [s for s, x in vals.items() if x == "u"]
    if len(undef) > limits.max_oracle_undefined:
        raise CapExceeded(f"{len(undef)} undefined statements (oracle cap {limits.max_oracle_undefined})")
    fixed_true = [s for s, x in vals.items() if x == "t"]
    out = []
    for choice in itertools.product((True, False), repeat=len(undef)):
        out.append(TwoValued.of(v.vocab, fixed_true + [s for s, c in zip(undef, choice) if c]))
    return out


def gamma_bruteforce(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> ThreeValued:
    comps = completion_set(v, limits=limits)
    out = {}
    for i, name in enumerate(adf.vocab.names):
        seen = {adf.conditions[i].value(w.trues) for w in comps}
        out[name] = "u" if len(seen) == 2 else ("t" if True in seen else "f")
    return ThreeValued.from_values(adf.vocab, out)


def is_model_bf(adf: Adf, w: TwoValued) -> bool:
    return all(
        ((w.trues >> i) & 1 == 1) == adf.conditions[i].value(w.trues) for i in range(adf.n)
    )


class GammaTable(dict):
    """Memo of ``gamma_bruteforce`` over one ADF, filled on demand."""

    def __init__(self, adf: Adf, limits: Limits = DEFAULT_LIMITS):
        super().__init__()
        self.adf = adf
        self.limits = limits

    def __missing__(self, v: ThreeValued) -> ThreeValued:
        g = self[v] = gamma_bruteforce(self.adf, v, limits=self.limits)
        return g


def is_admissible_bf(adf: Adf, v: ThreeValued, *, limits: Limits = DEFAULT_LIMITS,
                     table: GammaTable | None = None) -> bool:
    g = table[v] if table is not None else gamma_bruteforce(adf, v, limits=limits)
    return _info_leq(v, g)


def is_complete_bf(adf: Adf, v: ThreeValued, *, limits: Limits = DEFAULT_LIMITS,
                   table: GammaTable | None = None) -> bool:
    g = table[v] if table is not None else gamma_bruteforce(adf, v, limits=limits)
    return g.values() == v.values()


def grounded_bruteforce(adf: Adf, *, limits: Limits = DEFAULT_LIMITS,
                        table: GammaTable | None = None) -> ThreeValued:
    """The unique complete interpretation lying ≤_i-below every complete interpretation."""
    table = table if table is not None else GammaTable(adf, limits)
    comp = [v for v in enum_all_three(adf.vocab, limits=limits) if is_complete_bf(adf, v, table=table)]
    least = [c for c in comp if all(_info_leq(c, d) for d in comp)]
    if len(least) != 1:
        raise AdfError(f"expected a unique least complete interpretation, found {len(least)}")
    return least[0]


def reduct_bf(adf: Adf, w: TwoValued) -> Adf:
    keep = [i for i in range(adf.n) if w.trues >> i & 1]
    pos = {old: k for k, old in enumerate(keep)}
    vocab = Vocabulary(tuple(adf.vocab.names[i] for i in keep))
    conds = tuple(
        map_atoms(adf.conditions[s], lambda a: Atom(pos[a]) if a in pos else BOTTOM) for s in keep
    )
    links = frozenset((pos[a], pos[b]) for a, b in adf.links if a in pos and b in pos)
    return Adf(vocab, conds, links)


def is_stable_bf(adf: Adf, w: TwoValued, *, limits: Limits = DEFAULT_LIMITS) -> bool:
    if not is_model_bf(adf, w):
        return False
    g = grounded_bruteforce(reduct_bf(adf, w), limits=limits)
    return all(x == "t" for x in g.values().values())


def semantics_bruteforce(adf: Adf, sem: Semantics | str, *, limits: Limits = DEFAULT_LIMITS,
                         table: GammaTable | None = None) -> list[ThreeValued]:
    """Filter the exhaustive interpretation scan by the literal definition of ``sem``."""
    sem = Semantics(sem)
    table = table if table is not None else GammaTable(adf, limits)
    if sem is Semantics.MODEL:
        found = [w for w in enum_all_two(adf.vocab, limits=limits) if is_model_bf(adf, w)]
    elif sem is Semantics.STABLE:
        found = [w for w in enum_all_two(adf.vocab, limits=limits) if is_stable_bf(adf, w, limits=limits)]
    elif sem is Semantics.GROUNDED:
        found = [grounded_bruteforce(adf, limits=limits, table=table)]
    else:
        scan = list(enum_all_three(adf.vocab, limits=limits))
        adm = [v for v in scan if is_admissible_bf(adf, v, table=table)]
        if sem is Semantics.ADMISSIBLE:
            found = adm
        elif sem is Semantics.COMPLETE:
            found = [v for v in scan if is_complete_bf(adf, v, table=table)]
        else:
            found = [v for v in adm if not any(u != v and _info_leq(v, u) for u in adm)]
    return sort_interpretations(found)


def all_semantics_bruteforce(adf: Adf, *, limits: Limits = DEFAULT_LIMITS) -> dict[Semantics, list[ThreeValued]]:
    """Every semantics by brute force, sharing one Γ memo."""
    table = GammaTable(adf, limits)
    return {sem: semantics_bruteforce(adf, sem, limits=limits, table=table) for sem in Semantics}
