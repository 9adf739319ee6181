import pytest
from hypothesis import given

from adfsolve import Adf, Atom, Neg, ParseError, ThreeValued, Vocabulary, parse_adf, parse_interp, print_interp
from adfsolve.parsing import format_adf

from conftest import INSTANCES, adfs, adf_and_interp

RUNNING = "s(a). s(b). s(c). s(d). ac(a,c(v)). ac(b,b). ac(c,and(a,b)). ac(d,neg(b))."
ATTACK = "s(a). s(b). ac(a,neg(b)). ac(b,neg(a))."


def messages(text):
    with pytest.raises(ParseError) as e:
        parse_adf(text)
    return [d.message for d in e.value.diagnostics], e.value.diagnostics


def test_parse_running_structure(running):
    adf = parse_adf(RUNNING)
    assert adf.vocab.names == ("a", "b", "c", "d")
    idx = adf.vocab.index
    assert adf.links == frozenset({(idx["a"], idx["c"]), (idx["b"], idx["b"]),
                                   (idx["b"], idx["c"]), (idx["b"], idx["d"])})
    assert adf == running


def test_parse_mutual_attack():
    adf = parse_adf(ATTACK)
    assert adf.conditions == (Neg(Atom(1)), Neg(Atom(0)))
    assert adf.links == frozenset({(1, 0), (0, 1)})


def test_undeclared_atom():
    msgs, _ = messages("s(a). ac(a, and(a,b)).")
    assert msgs == ["atom b undeclared"]


def test_whitespace_and_comments():
    text = "% header\ns( a ) .\n  ac(a,\n   neg( a )) . % trailing\n"
    assert parse_adf(text).conditions == (Neg(Atom(0)),)


def test_syntax_error_location():
    _, diags = messages("s(a).\nac(a, and(a a)).")
    assert (diags[0].line, diags[0].column) == (2, 13)
    assert str(diags[0]).startswith("2:13: error:")


def test_unknown_fact():
    msgs, _ = messages("s(a). foo(a).")
    assert msgs == ["unknown fact 'foo'"]


def test_semantic_errors_are_collected():
    msgs, _ = messages("s(a). s(a). s(b). ac(a,c(v)). ac(a,c(f)). ac(z,c(v)).")
    assert "duplicate statement a" in msgs
    assert "duplicate condition for a" in msgs
    assert "condition for undeclared statement z" in msgs
    assert "missing condition for b" in msgs


def test_explicit_links_are_authoritative():
    adf = parse_adf("s(a). s(b). ac(a,c(v)). ac(b,a). l(a,b). l(b,b).")
    assert adf.links == frozenset({(0, 1), (1, 1)})
    msgs, _ = messages("s(a). s(b). ac(a,b). ac(b,c(v)). l(a,b).")
    assert msgs == ["atom b not a parent of a"]
    msgs, _ = messages("s(a). ac(a,c(v)). l(a,q).")
    assert msgs == ["link mentions undeclared statement q"]


def test_zero_statements():
    adf = parse_adf("% nothing here\n")
    assert adf.n == 0 and format_adf(adf) == "\n"


def test_format_emits_links_only_when_needed(running):
    assert "l(" not in format_adf(running)
    dont_care = parse_adf("s(a). s(b). ac(a,c(v)). ac(b,c(f)). l(a,b).")
    assert format_adf(dont_care).endswith("l(a,b).\n")


@pytest.mark.parametrize("path", sorted(INSTANCES.glob("*.adf")), ids=lambda p: p.stem)
def test_round_trip_instances(path):
    adf = parse_adf(path.read_text())
    again = parse_adf(format_adf(adf))
    assert again == adf
    assert format_adf(again) == format_adf(adf)


@given(adfs(max_n=5))
def test_round_trip_generated(adf):
    assert parse_adf(format_adf(adf)) == adf


def test_parse_interp_examples(running):
    v = parse_interp("t(a) u(b) u(c) u(d)", running.vocab)
    assert v == ThreeValued.from_values(running.vocab, {"a": "t"})
    assert print_interp(ThreeValued.undefined(Vocabulary(("a", "b")))) == "u(a) u(b)"


def test_parse_interp_errors(running):
    vocab = Vocabulary(("a",))
    with pytest.raises(ParseError, match="duplicate statement a"):
        parse_interp("t(a) t(a)", vocab)
    with pytest.raises(ParseError, match="unknown statement z"):
        parse_interp("t(a) f(z)", vocab)
    with pytest.raises(ParseError, match="missing statement b"):
        parse_interp("t(a) u(c) u(d)", running.vocab)
    with pytest.raises(ParseError, match="malformed"):
        parse_interp("t(a) x", vocab)


def test_parse_interp_on_empty_vocabulary():
    assert parse_interp("", Vocabulary(())) == ThreeValued.undefined(Vocabulary(()))


@given(adf_and_interp(max_n=6))
def test_interp_round_trip(case):
    adf, v = case
    assert parse_interp(print_interp(v), adf.vocab) == v


def test_adf_equality_is_structural():
    a = parse_adf("s(x). ac(x,neg(x)).")
    b = Adf(Vocabulary(("x",)), (Neg(Atom(0)),), frozenset({(0, 0)}))
    assert a == b
