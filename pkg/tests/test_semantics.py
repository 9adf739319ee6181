import pytest
from hypothesis import given, settings

from adfsolve import (
    Adf, Atom, CapExceeded, Const, Limits, NotAModel, Semantics, ThreeValued, Vocabulary,
    enumerate_semantics, grounded, is_admissible, is_complete, is_grounded, is_model,
    is_preferred, is_stable, reduct,
)
from adfsolve.parsing import format_adf
from adfsolve.semantics import holds, kleene_grounded, maximal, preferred_via_complete

from conftest import adfs, interp, two


def strs(vs):
    return [str(v) for v in vs]


V1 = "t(a) t(b) t(c) f(d)"
V2 = "t(a) f(b) f(c) t(d)"
V3 = "t(a) u(b) u(c) u(d)"


def test_running_semantics(running):
    assert strs(enumerate_semantics(running, "mod")) == [V1, V2]
    assert strs(enumerate_semantics(running, "com")) == [V1, V2, V3]
    assert strs(enumerate_semantics(running, "prf")) == [V1, V2]
    assert strs(enumerate_semantics(running, "grd")) == [V3]
    assert strs(enumerate_semantics(running, "stb")) == [V2]


def test_running_admissible_set(running):
    adm = strs(enumerate_semantics(running, Semantics.ADMISSIBLE))
    assert V1 in adm and V2 in adm and V3 in adm
    assert "u(a) u(b) u(c) u(d)" in adm
    assert "f(a) u(b) u(c) u(d)" not in adm


def test_running_false_a_not_admissible(running):
    v = interp(running, a="f")
    assert not is_admissible(running, v)
    assert not holds(running, "adm", v)


def test_mutual_attack_semantics(attack):
    both = ["t(a) f(b)", "f(a) t(b)"]
    for sem in ("mod", "stb", "prf"):
        assert strs(enumerate_semantics(attack, sem)) == both
    assert strs(enumerate_semantics(attack, "com")) == both + ["u(a) u(b)"]
    assert strs(enumerate_semantics(attack, "grd")) == ["u(a) u(b)"]
    assert not is_admissible(attack, two(attack, "a", "b"))
    assert not is_admissible(attack, two(attack))


def test_selfloop_model_not_stable(selfloop):
    w = two(selfloop, "a")
    assert is_model(selfloop, w)
    assert not is_stable(selfloop, w)
    assert strs(enumerate_semantics(selfloop, "mod")) == ["t(a)", "f(a)"]
    assert strs(enumerate_semantics(selfloop, "stb")) == ["f(a)"]


def test_reduct_examples(running):
    r1 = reduct(running, two(running, "a", "b", "c"))
    assert r1.vocab.names == ("a", "b", "c")
    assert str(grounded(r1)) == "t(a) u(b) u(c)"
    r2 = reduct(running, two(running, "a", "d"))
    assert r2.vocab.names == ("a", "d")
    assert format_adf(r2) == "s(a).\ns(d).\nac(a,c(v)).\nac(d,neg(c(f))).\n"
    assert str(grounded(r2)) == "t(a) t(d)"


def test_reduct_requires_model(running):
    with pytest.raises(NotAModel):
        reduct(running, two(running, "a"))
    with pytest.raises(NotAModel):
        reduct(running, interp(running, a="t"))


def test_stable_rejects_non_models(running):
    assert not is_stable(running, two(running))
    assert not is_stable(running, interp(running, a="t"))


def test_kleene_grounded_steps(running):
    v, steps = kleene_grounded(running)
    assert str(v) == V3
    assert steps == 2


def test_constant_true_single_statement():
    adf = Adf(Vocabulary(("s",)), (Const(True),), frozenset())
    assert strs(enumerate_semantics(adf, "grd")) == ["t(s)"]
    assert all(strs(enumerate_semantics(adf, s)) == ["t(s)"] for s in ("mod", "stb", "prf", "com"))


def test_empty_instance_has_empty_interpretation():
    adf = Adf(Vocabulary(()), (), frozenset())
    for sem in Semantics:
        assert strs(enumerate_semantics(adf, sem)) == [""]


def test_is_preferred_and_is_grounded(running):
    assert is_preferred(running, two(running, "a", "d"))
    assert not is_preferred(running, interp(running, a="t"))
    assert is_grounded(running, interp(running, a="t"))
    assert not is_grounded(running, two(running, "a", "d"))


def test_is_preferred_cap():
    vocab = Vocabulary(tuple("abcd"))
    adf = Adf(vocab, tuple(Atom(i) for i in range(4)), frozenset((i, i) for i in range(4)))
    with pytest.raises(CapExceeded):
        is_preferred(adf, ThreeValued.undefined(vocab), limits=Limits(max_enum_three=3))


def test_enumeration_caps():
    vocab = Vocabulary(tuple("abcd"))
    adf = Adf(vocab, (Const(True),) * 4, frozenset())
    with pytest.raises(CapExceeded):
        enumerate_semantics(adf, "com", limits=Limits(max_enum_three=3))
    with pytest.raises(CapExceeded):
        enumerate_semantics(adf, "mod", limits=Limits(max_enum_two=3))
    assert len(enumerate_semantics(adf, "grd", limits=Limits(max_enum_three=0, max_enum_two=0))) == 1


def test_maximal():
    vocab = Vocabulary(("a", "b"))
    vs = [ThreeValued.from_values(vocab, d) for d in ({}, {"a": "t"}, {"a": "t", "b": "f"}, {"b": "t"})]
    assert set(strs(maximal(vs))) == {"t(a) f(b)", "u(a) t(b)"}


@settings(max_examples=60)
@given(adfs(max_n=4))
def test_preferred_shortcut_agrees(adf):
    assert enumerate_semantics(adf, "prf") == preferred_via_complete(adf)


@settings(max_examples=60)
@given(adfs(max_n=4))
def test_enumeration_matches_predicates(adf):
    for sem in Semantics:
        for v in enumerate_semantics(adf, sem):
            assert holds(adf, sem, v)


@settings(max_examples=60)
@given(adfs(max_n=4))
def test_enumeration_order(adf):
    for sem in Semantics:
        found = enumerate_semantics(adf, sem)
        assert found == sorted(found, key=ThreeValued.sort_key)
        assert len(set(found)) == len(found)


@settings(max_examples=60)
@given(adfs(max_n=5))
def test_kleene_step_bound(adf):
    v, steps = kleene_grounded(adf)
    assert steps <= adf.n + 1
    assert is_complete(adf, v)
