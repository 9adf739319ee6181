"""Random instances and property checks for the meta-theory of ADF semantics.

Forward properties (inclusions, existence, operator lemmas) must hold on every
sampled instance. Converses are expected to fail: the search stops at the
first violating instance, shrinks it, and reports it as a counterexample.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .config import DEFAULT_LIMITS, Limits
from .core import (
    BINARY_OPS, BOTTOM, TOP, Adf, Atom, Const, Formula, Neg, ThreeValued, TwoValued, Vocabulary,
    bits, conjunction, map_atoms, subsets, validate,
)
from .operators import apply_G, gamma, leq_i
from .oracle import completion_set, gamma_bruteforce, grounded_bruteforce
from .parsing import format_adf, parse_adf
from .semantics import (
    Semantics, all_three_valued, all_two_valued, enumerate_semantics, is_admissible, is_complete,
    is_model, is_stable, kleene_grounded,
)

SELF_SUPPORT_INSTANCE = "s(a).\nac(a,a).\n"


@dataclass(frozen=True)
class GenConfig:
    """Instance-generator settings.

    ``n_statements`` is the exact size for :func:`gen_random_adf` and the upper
    bound of the per-trial size range for the property checks.
    """

    n_statements: int = 5
    max_formula_depth: int = 3
    link_density: float = 0.4
    seed: int = 0
    trials: int = 1000
    min_statements: int = 1
    samples: int = 10  # random interpretations per trial for the operator lemmas

    def __post_init__(self) -> None:
        if self.n_statements < 1 or self.min_statements < 1:
            raise ValueError("n_statements must be at least 1")
        if self.min_statements > self.n_statements:
            raise ValueError("min_statements exceeds n_statements")
        if not 0.0 <= self.link_density <= 1.0:
            raise ValueError("link_density must lie in [0, 1]")
        if self.max_formula_depth < 0 or self.trials < 0 or self.samples < 0:
            raise ValueError("depth, trials and samples must be non-negative")


def statement_names(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"s{i}" for i in range(n))


def _random_formula(rng: random.Random, parents: Sequence[int], depth: int) -> Formula:
    if not parents:
        return Const(rng.random() < 0.5)
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return Const(rng.random() < 0.5)
        return Atom(rng.choice(parents))
    op = rng.choice(("neg", "and", "or", "imp", "iff", "xor"))
    if op == "neg":
        return Neg(_random_formula(rng, parents, depth - 1))
    return BINARY_OPS[op](_random_formula(rng, parents, depth - 1),
                          _random_formula(rng, parents, depth - 1))


def af_condition(parent_list: Sequence[int]) -> Formula:
    """Conjunction of the negated parents: true exactly when no parent is true."""
    return conjunction([Neg(Atom(p)) for p in parent_list])


def gen_random_adf(cfg: GenConfig, rng: random.Random | None = None, *, af: bool = False) -> Adf:
    """Random ADF with ``cfg.n_statements`` statements; AF-shaped when ``af`` is set."""
    rng = rng if rng is not None else random.Random(cfg.seed)
    n = cfg.n_statements
    vocab = Vocabulary(statement_names(n))
    links = frozenset((b, s) for s in range(n) for b in range(n) if rng.random() < cfg.link_density)
    conds = []
    for s in range(n):
        plist = sorted(b for b, t in links if t == s)
        if af:
            conds.append(af_condition(plist))
        else:
            conds.append(_random_formula(rng, plist, cfg.max_formula_depth))
    return Adf(vocab, tuple(conds), links)


def is_af_shaped(adf: Adf) -> bool:
    """Every condition accepts exactly the empty parent set."""
    for s in range(adf.n):
        pm = adf.parent_masks[s]
        ev = adf.evaluators[s]
        if any(bool(ev(sub)) != (sub == 0) for sub in subsets(pm)):
            return False
    return True


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def trial_instances(cfg: GenConfig, *, af: bool = False) -> Iterator[Adf]:
    """The deterministic instance stream for ``cfg``; trial ``t`` depends only on (seed, t)."""
    for t in range(cfg.trials):
        rng = trial_rng(cfg.seed, t)
        n = rng.randint(cfg.min_statements, cfg.n_statements)
        yield gen_random_adf(replace(cfg, n_statements=n), rng, af=af)


# -- per-instance cache -------------------------------------------------------


class Trial:
    """An instance plus lazily computed semantics, shared by all properties."""

    def __init__(self, adf: Adf, index: int = -1, limits: Limits = DEFAULT_LIMITS, samples: int = 10):
        self.adf = adf
        self.index = index
        self.limits = limits
        self.samples = samples

    def sem(self, s: Semantics) -> list[ThreeValued]:
        if s not in self._sems:
            self._sems[s] = enumerate_semantics(self.adf, s, limits=self.limits)
        return self._sems[s]

    @cached_property
    def _sems(self) -> dict[Semantics, list[ThreeValued]]:
        return {}


def _random_three(adf: Adf, rng: random.Random) -> ThreeValued:
    d = rng.getrandbits(adf.n) if adf.n else 0
    t = rng.getrandbits(adf.n) & d if adf.n else 0
    return ThreeValued(adf.vocab, d, t)


def _random_two(adf: Adf, rng: random.Random) -> TwoValued:
    return TwoValued(adf.vocab, rng.getrandbits(adf.n) if adf.n else 0)


# -- properties ---------------------------------------------------------------

Witness = tuple
Check = Callable[[Trial, random.Random], "Witness | None"]


@dataclass(frozen=True)
class Property:
    name: str
    expect: str  # "holds" or "cex"
    check: Check
    summary: str
    af: bool = False
    fixtures: tuple[str, ...] = ()


def _first_outside(sub: Iterable[ThreeValued], sup: Iterable[ThreeValued]) -> Witness | None:
    sup = set(sup)
    for v in sub:
        if v not in sup:
            return (v,)
    return None


def _inclusion(a: Semantics, b: Semantics) -> Check:
    return lambda t, rng: _first_outside(t.sem(a), t.sem(b))


def _existence(t: Trial, rng: random.Random) -> Witness | None:
    for s in (Semantics.ADMISSIBLE, Semantics.COMPLETE, Semantics.PREFERRED, Semantics.GROUNDED):
        if not t.sem(s):
            return (f"no {s.name.lower()} interpretation",)
    return None


def _bottom_admissible(t: Trial, rng: random.Random) -> Witness | None:
    bottom = ThreeValued.undefined(t.adf.vocab)
    return None if is_admissible(t.adf, bottom, limits=t.limits) else (bottom,)


def _not_all_admissible(t: Trial, rng: random.Random) -> Witness | None:
    adm = set(t.sem(Semantics.ADMISSIBLE))
    for v in all_three_valued(t.adf.vocab, limits=t.limits):
        if v not in adm:
            return (v,)
    return None


def _grounded_uniqueness(t: Trial, rng: random.Random) -> Witness | None:
    grd = t.sem(Semantics.GROUNDED)
    if len(grd) != 1:
        return tuple(grd) or ("no grounded interpretation",)
    g = grd[0]
    comp = t.sem(Semantics.COMPLETE)
    least = [c for c in comp if all(leq_i(c, d) for d in comp)]
    if least != [g]:
        return (g, *least)
    bf = grounded_bruteforce(t.adf, limits=t.limits)
    if bf != g:
        return (g, bf)
    v, steps = kleene_grounded(t.adf, limits=t.limits)
    if steps > t.adf.n + 1:
        return (v, f"{steps} Γ applications for {t.adf.n} statements")
    return None


def _gamma_preserves_admissible(t: Trial, rng: random.Random) -> Witness | None:
    for v in t.sem(Semantics.ADMISSIBLE):
        gv = gamma(t.adf, v, limits=t.limits)
        if not is_admissible(t.adf, gv, limits=t.limits):
            return (v, gv)
    return None


def _two_valued_equiv(sem: Semantics) -> Check:
    def check(t: Trial, rng: random.Random) -> Witness | None:
        members = set(t.sem(sem))
        for w in all_two_valued(t.adf.vocab, limits=t.limits):
            if is_model(t.adf, w) != (w.as_three() in members):
                return (w,)
        return None
    return check


def _model_equiv_stable(t: Trial, rng: random.Random) -> Witness | None:
    for w in t.sem(Semantics.MODEL):
        if not is_stable(t.adf, w, limits=t.limits):
            return (w,)
    return None


def _parent_subset_S(t: Trial, rng: random.Random) -> Witness | None:
    full = t.adf.vocab.full
    for s in range(t.adf.n):
        if t.adf.parent_masks[s] & ~full:
            return (t.adf.vocab.names[s],)
    return None


def _S_subset_parents(t: Trial, rng: random.Random) -> Witness | None:
    full = t.adf.vocab.full
    for s in range(t.adf.n):
        if full & ~t.adf.parent_masks[s]:
            return (t.adf.vocab.names[s],)
    return None


def _two_val_operator(t: Trial, rng: random.Random) -> Witness | None:
    for _ in range(t.samples):
        w = _random_two(t.adf, rng)
        if apply_G(t.adf, w).trues & ~t.adf.vocab.full:
            return (w,)
    return None


def _gamma_V3(t: Trial, rng: random.Random) -> Witness | None:
    full = t.adf.vocab.full
    for _ in range(t.samples):
        v = _random_three(t.adf, rng)
        g = gamma(t.adf, v, limits=t.limits)
        if g.trues & ~g.defined or g.defined & ~full:
            return (v, g)
    return None


def _gamma_two_valued_defined(t: Trial, rng: random.Random) -> Witness | None:
    for _ in range(t.samples):
        w = _random_two(t.adf, rng)
        if gamma(t.adf, w, limits=t.limits).defined != t.adf.vocab.full:
            return (w,)
    return None


def _gamma_two_valued_trues(t: Trial, rng: random.Random) -> Witness | None:
    for _ in range(t.samples):
        w = _random_two(t.adf, rng)
        if gamma(t.adf, w, limits=t.limits).trues != apply_G(t.adf, w).trues:
            return (w,)
    return None


def _false_consensus(t: Trial, rng: random.Random) -> Witness | None:
    for _ in range(t.samples):
        v = _random_three(t.adf, rng)
        g = gamma(t.adf, v, limits=t.limits)
        comps = completion_set(v, limits=t.limits)
        for s in range(t.adf.n):
            defined_false = bool(g.defined >> s & 1) and not g.trues >> s & 1
            all_false = not any(t.adf.conditions[s].value(w.trues) for w in comps)
            if defined_false != all_false:
                return (v, t.adf.vocab.names[s])
    return None


def _gamma_monotone(t: Trial, rng: random.Random) -> Witness | None:
    n = t.adf.n
    for _ in range(t.samples):
        lo = _random_three(t.adf, rng)
        extra = rng.getrandbits(n) & lo.undefined_mask if n else 0
        hi = ThreeValued(lo.vocab, lo.defined | extra, lo.trues | (rng.getrandbits(n) & extra if n else 0))
        if not leq_i(gamma(t.adf, lo, limits=t.limits), gamma(t.adf, hi, limits=t.limits)):
            return (lo, hi)
    return None


def _gamma_matches_oracle(t: Trial, rng: random.Random) -> Witness | None:
    for _ in range(t.samples):
        v = _random_three(t.adf, rng)
        if gamma(t.adf, v, limits=t.limits) != gamma_bruteforce(t.adf, v, limits=t.limits):
            return (v,)
    return None


M, STB, ADM, COM, PRF, GRD = (Semantics.MODEL, Semantics.STABLE, Semantics.ADMISSIBLE,
                              Semantics.COMPLETE, Semantics.PREFERRED, Semantics.GROUNDED)

INCLUSION_PROPERTIES = (
    Property("stable_to_model", "holds", _inclusion(STB, M), "every stable model is a model"),
    Property("model_to_preferred", "holds", _inclusion(M, PRF), "every model is preferred"),
    Property("preferred_to_complete", "holds", _inclusion(PRF, COM), "every preferred interpretation is complete"),
    Property("complete_to_admissible", "holds", _inclusion(COM, ADM), "every complete interpretation is admissible"),
    Property("grounded_to_complete", "holds", _inclusion(GRD, COM), "the grounded interpretation is complete"),
    Property("model_to_stable", "cex", _inclusion(M, STB), "some model is not stable",
             fixtures=(SELF_SUPPORT_INSTANCE,)),
    Property("preferred_to_model", "cex", _inclusion(PRF, M), "some preferred interpretation is not a model"),
    Property("complete_to_preferred", "cex", _inclusion(COM, PRF), "some complete interpretation is not preferred"),
    Property("admissible_to_complete", "cex", _inclusion(ADM, COM), "some admissible interpretation is not complete"),
    Property("complete_to_grounded", "cex", _inclusion(COM, GRD), "some complete interpretation is not grounded"),
)

EXISTENCE_PROPERTIES = (
    Property("existence", "holds", _existence,
             "admissible, complete, preferred and grounded interpretations exist"),
    Property("bottom_admissible", "holds", _bottom_admissible, "the all-undefined interpretation is admissible"),
    Property("not_all_admissible", "cex", _not_all_admissible, "some interpretation is not admissible"),
)

GROUNDED_PROPERTIES = (
    Property("grounded_superscript_uniqueness", "holds", _grounded_uniqueness,
             "exactly one grounded interpretation, the least complete one"),
)

LEMMA_PROPERTIES = (
    Property("preferred_to_complete_1", "holds", _gamma_preserves_admissible,
             "Γ maps admissible interpretations to admissible ones"),
    Property("V2_model_equiv_preferred", "holds", _two_valued_equiv(PRF),
             "a two-valued interpretation is a model iff it is preferred"),
    Property("V2_model_equiv_complete", "holds", _two_valued_equiv(COM),
             "a two-valued interpretation is a model iff it is complete"),
)

AF_PROPERTIES = (
    Property("model_equiv_stable_AF", "holds", _model_equiv_stable,
             "on AF-shaped instances every model is stable", af=True),
    Property("model_equiv_stable_nonAF", "cex", _model_equiv_stable,
             "without the AF shape some model is not stable", fixtures=(SELF_SUPPORT_INSTANCE,)),
)

OPERATOR_PROPERTIES = (
    Property("parent_subset_S", "holds", _parent_subset_S, "parents lie inside the statement set"),
    Property("S_subset_parents", "cex", _S_subset_parents, "some statement set is not inside a parent set"),
    Property("two_val_operator", "holds", _two_val_operator, "G yields a two-valued interpretation"),
    Property("ult_approx_operator_V3", "holds", _gamma_V3, "Γ yields a valid three-valued interpretation"),
    Property("ult_approx_operator_bot_consensus", "holds", _false_consensus,
             "Γ decides f exactly when every completion falsifies the condition"),
    Property("V2_GammaX_G_relation", "holds", _gamma_two_valued_defined,
             "Γ of a two-valued interpretation is two-valued"),
    Property("V2_Gammav_G_relation", "holds", _gamma_two_valued_trues,
             "Γ agrees with G on two-valued interpretations"),
    Property("Gamma_info_ordering_monotone", "holds", _gamma_monotone, "Γ is ≤_i-monotone"),
    Property("gamma_parent_restriction", "holds", _gamma_matches_oracle,
             "Γ over undefined parents equals Γ over the full completion set"),
)

ALL_PROPERTIES = (INCLUSION_PROPERTIES + EXISTENCE_PROPERTIES + GROUNDED_PROPERTIES
                  + LEMMA_PROPERTIES + AF_PROPERTIES + OPERATOR_PROPERTIES)
PROPERTIES = {p.name: p for p in ALL_PROPERTIES}


# -- reports and the driver -------------------------------------------------


@dataclass
class PropertyReport:
    name: str
    expected: str
    trials: int = 0
    violations: list[tuple[Adf, Witness]] = field(default_factory=list)
    path: Path | None = None
    found_in_fixture: bool = False

    @property
    def status(self) -> str:
        return "cex" if self.violations else "holds"

    @property
    def ok(self) -> bool:
        return self.status == self.expected

    def record(self) -> str:
        line = f"PROP {self.name} TRIALS {self.trials} STATUS {self.status}"
        return f"{line} FILE {self.path}" if self.path is not None else line

    def describe(self) -> str:
        verdict = "as expected" if self.ok else "UNEXPECTED"
        head = f"{self.name}: {self.status} after {self.trials} trials ({verdict})"
        if not self.violations:
            return head
        adf, wit = self.violations[0]
        return f"{head}\n{counterexample_text(adf, wit).rstrip()}"


def _fmt_witness(x) -> str:
    return str(x) if not isinstance(x, (ThreeValued, TwoValued)) else (str(x) or "(empty interpretation)")


def counterexample_text(adf: Adf, witness: Witness) -> str:
    lines = [f"% witness: {_fmt_witness(x)}" for x in witness]
    return "\n".join(lines) + "\n" + format_adf(adf)


def _remove_statement(adf: Adf, i: int, fill: Formula) -> Adf:
    keep = [j for j in range(adf.n) if j != i]
    pos = {old: k for k, old in enumerate(keep)}
    vocab = Vocabulary(tuple(adf.vocab.names[j] for j in keep))
    conds = tuple(map_atoms(adf.conditions[j], lambda a: fill if a == i else Atom(pos[a])) for j in keep)
    links = frozenset((pos[a], pos[b]) for a, b in adf.links if a in pos and b in pos)
    return Adf(vocab, conds, links)


def _formula_variants(f: Formula) -> Iterator[Formula]:
    if isinstance(f, Const):
        return
    if isinstance(f, Atom):
        yield TOP
        yield BOTTOM
        return
    yield from f.children()
    yield TOP
    yield BOTTOM
    if isinstance(f, Neg):
        for g in _formula_variants(f.arg):
            yield Neg(g)
        return
    yield Neg(f.left)
    yield Neg(f.right)
    for g in _formula_variants(f.left):
        yield type(f)(g, f.right)
    for g in _formula_variants(f.right):
        yield type(f)(f.left, g)


def _shrink_candidates(adf: Adf) -> Iterator[Adf]:
    if adf.n > 1:
        for i in range(adf.n):
            for fill in (BOTTOM, TOP):
                yield _remove_statement(adf, i, fill)
    for s in range(adf.n):
        used = adf.conditions[s].atoms()
        for a, b in sorted(adf.links):
            if b == s and not used >> a & 1:
                yield Adf(adf.vocab, adf.conditions, adf.links - {(a, b)})
    for s in range(adf.n):
        for g in _formula_variants(adf.conditions[s]):
            conds = adf.conditions[:s] + (g,) + adf.conditions[s + 1:]
            yield Adf(adf.vocab, conds, adf.links)


def _size(adf: Adf) -> tuple[int, int, int]:
    return (adf.n, sum(f.size() for f in adf.conditions), len(adf.links))


def shrink(adf: Adf, violates: Callable[[Adf], "Witness | None"], *, af: bool = False,
           max_rounds: int = 200) -> tuple[Adf, Witness]:
    """Greedily minimize ``adf`` while ``violates`` keeps returning a witness."""
    wit = violates(adf)
    assert wit is not None
    for _ in range(max_rounds):
        for cand in _shrink_candidates(adf):
            if _size(cand) >= _size(adf) or validate(cand):
                continue
            if af and not is_af_shaped(cand):
                continue
            w = violates(cand)
            if w is not None:
                adf, wit = cand, w
                break
        else:
            break
    return adf, wit


def check_property(prop: Property, cfg: GenConfig, *, limits: Limits = DEFAULT_LIMITS,
                   trials: Sequence[Trial] | None = None, use_fixtures: bool = True,
                   out_dir: Path | None = None, max_violations: int = 5) -> PropertyReport:
    """Run ``prop`` over the fixtures and the seeded instance stream.

    Expected-counterexample searches stop at the first violation; forward
    properties run the full budget.
    """
    report = PropertyReport(prop.name, prop.expect)
    if trials is None:
        trials = build_trials(cfg, af=prop.af, limits=limits)

    def rng_for(index: int) -> random.Random:
        return random.Random(f"{cfg.seed}:{index}:{prop.name}")

    def violates(adf: Adf) -> Witness | None:
        return prop.check(Trial(adf, -1, limits, cfg.samples), rng_for(-1))

    stream: list[tuple[bool, Trial]] = []
    if use_fixtures:
        for text in prop.fixtures:
            stream.append((True, Trial(parse_adf(text), -1, limits, cfg.samples)))
    stream += [(False, t) for t in trials]
    for is_fixture, t in stream:
        report.trials += 1
        wit = prop.check(t, rng_for(t.index))
        if wit is None:
            continue
        if not report.violations:
            report.found_in_fixture = is_fixture
        if prop.expect == "cex":
            report.violations.append(shrink(t.adf, violates, af=prop.af))
            break
        if len(report.violations) < max_violations:
            report.violations.append((t.adf, wit))
    if report.violations and out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
        report.path = out_dir / f"{prop.name}.adf"
        adf, wit = report.violations[0]
        report.path.write_text(counterexample_text(adf, wit))
    return report


def build_trials(cfg: GenConfig, *, af: bool = False, limits: Limits = DEFAULT_LIMITS) -> list[Trial]:
    return [Trial(adf, t, limits, cfg.samples) for t, adf in enumerate(trial_instances(cfg, af=af))]


def run_properties(props: Iterable[Property], cfg: GenConfig, *, limits: Limits = DEFAULT_LIMITS,
                   use_fixtures: bool = True, out_dir: Path | None = None) -> list[PropertyReport]:
    """Check several properties, sharing per-instance enumeration caches."""
    props = list(props)
    corpora: dict[bool, list[Trial]] = {}
    reports = []
    for p in props:
        if p.af not in corpora:
            corpora[p.af] = build_trials(cfg, af=p.af, limits=limits)
        reports.append(check_property(p, cfg, limits=limits, trials=corpora[p.af],
                                      use_fixtures=use_fixtures, out_dir=out_dir))
    return reports


def check_inclusion_chain(cfg: GenConfig, **kw) -> list[PropertyReport]:
    """The five inclusions between semantics and their five converses."""
    return run_properties(INCLUSION_PROPERTIES, cfg, **kw)


def check_existence(cfg: GenConfig, **kw) -> list[PropertyReport]:
    return run_properties(EXISTENCE_PROPERTIES, cfg, **kw)


def check_af_equivalence(cfg: GenConfig, **kw) -> list[PropertyReport]:
    return run_properties(AF_PROPERTIES, cfg, **kw)


def check_grounded_uniqueness(cfg: GenConfig, **kw) -> PropertyReport:
    return run_properties(GROUNDED_PROPERTIES, cfg, **kw)[0]


def run_suite(cfg: GenConfig, names: Iterable[str] | None = None, **kw) -> list[PropertyReport]:
    props = ALL_PROPERTIES if names is None else [PROPERTIES[n] for n in names]
    return run_properties(props, cfg, **kw)
