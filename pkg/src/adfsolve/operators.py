"""Information ordering, completion sets, the model operator G and its ultimate approximation Γ."""

from __future__ import annotations

from typing import Iterator

from .config import DEFAULT_LIMITS, Limits
from .core import Adf, Interpretation, ThreeValued, TwoValued, subsets
from .errors import AdfError, CapExceeded


def leq_i(a: Interpretation, b: Interpretation) -> bool:
    """Information ordering: ``b`` keeps every t/f commitment of ``a``."""
    if a.vocab != b.vocab:
        raise AdfError("interpretations over different vocabularies")
    ad, bd = a.defined, b.defined
    return ad & ~bd == 0 and (a.trues ^ b.trues) & ad == 0


def completions(
    v: Interpretation, over: int | None = None, *, limits: Limits = DEFAULT_LIMITS
) -> Iterator[TwoValued]:
    """Two-valued interpretations agreeing with ``v`` on its defined part.

    Each yielded interpretation is true on ``v.trues`` plus one subset of ``over``
    and false elsewhere. With ``over`` left as ``None`` it ranges over every
    undefined statement, which yields exactly the completion set of ``v``.
    """
    v3 = v.as_three()
    if over is None:
        over = v3.undefined_mask
    if over & v3.defined:
        raise AdfError("completions range must avoid defined statements")
    k = bin(over).count("1")
    if k > limits.max_undefined:
        raise CapExceeded(f"{k} undefined statements to complete (cap {limits.max_undefined})")
    for sub in subsets(over):
        yield TwoValued(v3.vocab, v3.trues | sub)


def apply_G(adf: Adf, w: TwoValued | int) -> TwoValued:
    """Two-valued revision: each statement takes the value of its condition under ``w``."""
    mask = w if isinstance(w, int) else w.trues
    out = 0
    for s, ev in enumerate(adf.evaluators):
        if ev(mask):
            out |= 1 << s
    return TwoValued(adf.vocab, out)


def consensus(values) -> str:
    """'t' if all values are true, 'f' if all false, else 'u'. Stops once both are seen."""
    seen_t = seen_f = False
    for x in values:
        if x:
            seen_t = True
        else:
            seen_f = True
        if seen_t and seen_f:
            return "u"
    if seen_t:
        return "t"
    if seen_f:
        return "f"
    raise AdfError("consensus of an empty collection")


def statement_consensus(adf: Adf, s: int, defined: int, trues: int,
                        *, limits: Limits = DEFAULT_LIMITS) -> str:
    """Consensus of the condition of ``s`` over completions of its undefined parents."""
    pmask = adf.parent_masks[s]
    free = pmask & ~defined
    k = bin(free).count("1")
    if k > limits.max_undefined:
        raise CapExceeded(
            f"statement {adf.vocab.names[s]} has {k} undefined parents (cap {limits.max_undefined})")
    ev = adf.evaluators[s]
    base = trues & pmask
    return consensus(ev(base | sub) for sub in subsets(free))


def gamma(adf: Adf, v: Interpretation, *, limits: Limits = DEFAULT_LIMITS) -> ThreeValued:
    """Ultimate approximation of G applied to ``v``."""
    v3 = v.as_three()
    defined = trues = 0
    for s in range(adf.n):
        c = statement_consensus(adf, s, v3.defined, v3.trues, limits=limits)
        if c == "t":
            defined |= 1 << s
            trues |= 1 << s
        elif c == "f":
            defined |= 1 << s
    return ThreeValued(adf.vocab, defined, trues)
