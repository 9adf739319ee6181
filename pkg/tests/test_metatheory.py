import pytest

from adfsolve import Const, Semantics, enumerate_semantics, parse_adf, validate
from adfsolve.metatheory import (
    ALL_PROPERTIES, SELF_SUPPORT_INSTANCE, PROPERTIES, GenConfig, PropertyReport, build_trials,
    check_existence, check_grounded_uniqueness, check_property, counterexample_text,
    gen_random_adf, is_af_shaped, run_suite, shrink, trial_instances,
)
from adfsolve.parsing import format_adf

SMALL = GenConfig(n_statements=4, trials=60, seed=3)


def test_generator_is_deterministic():
    cfg = GenConfig(n_statements=5, seed=11)
    assert gen_random_adf(cfg) == gen_random_adf(cfg)
    assert list(trial_instances(SMALL)) == list(trial_instances(SMALL))


def test_zero_density_gives_constants():
    for seed in range(20):
        adf = gen_random_adf(GenConfig(n_statements=4, link_density=0.0, seed=seed))
        assert not adf.links
        assert all(isinstance(f, Const) for f in adf.conditions)


def test_generated_instances_validate():
    for seed in range(1000):
        adf = gen_random_adf(GenConfig(n_statements=4, max_formula_depth=2, seed=seed))
        assert validate(adf) == []


def test_af_generator_shape():
    for adf in trial_instances(GenConfig(n_statements=6, trials=100), af=True):
        assert is_af_shaped(adf)
        assert validate(adf) == []


def test_af_shape_detection(running, attack):
    assert is_af_shaped(attack)
    assert not is_af_shaped(running)


def test_trial_sizes_within_range():
    sizes = {adf.n for adf in trial_instances(GenConfig(n_statements=5, trials=200))}
    assert sizes == {1, 2, 3, 4, 5}


@pytest.mark.parametrize("kw", [dict(n_statements=0), dict(link_density=1.5),
                                dict(min_statements=6), dict(trials=-1)])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        GenConfig(**kw)


def test_property_names_unique():
    assert len(PROPERTIES) == len(ALL_PROPERTIES)
    assert {p.expect for p in ALL_PROPERTIES} == {"holds", "cex"}


def test_report_invariants():
    r = PropertyReport("p", "holds", trials=3)
    assert r.status == "holds" and r.ok
    assert r.record() == "PROP p TRIALS 3 STATUS holds"
    adf = parse_adf(SELF_SUPPORT_INSTANCE)
    r.violations.append((adf, ("t(a)",)))
    assert r.status == "cex" and not r.ok
    assert "UNEXPECTED" in r.describe()


def test_counterexample_text_parses_back():
    adf = parse_adf(SELF_SUPPORT_INSTANCE)
    w = enumerate_semantics(adf, "mod")[0]
    text = counterexample_text(adf, (w,))
    assert text.startswith("% witness: t(a)\n")
    assert parse_adf(text) == adf


def test_shrink_reaches_self_loop():
    big = parse_adf("s(a). s(b). s(c). ac(a,and(a,or(b,c))). ac(b,c(v)). ac(c,c(v)).")

    def violates(adf):
        stb = set(enumerate_semantics(adf, Semantics.STABLE))
        bad = [w for w in enumerate_semantics(adf, Semantics.MODEL) if w not in stb]
        return (bad[0],) if bad else None

    small, wit = shrink(big, violates)
    assert format_adf(small) == SELF_SUPPORT_INSTANCE
    assert str(wit[0]) == "t(a)"


def test_fixture_supplies_model_to_stable_counterexample():
    r = check_property(PROPERTIES["model_to_stable"], GenConfig(trials=0))
    assert r.status == "cex" and r.found_in_fixture
    adf, wit = r.violations[0]
    assert format_adf(adf) == SELF_SUPPORT_INSTANCE and str(wit[0]) == "t(a)"


def test_counterexample_file_written(tmp_path):
    r = check_property(PROPERTIES["complete_to_preferred"], SMALL, out_dir=tmp_path)
    assert r.ok and r.path == tmp_path / "complete_to_preferred.adf"
    text = r.path.read_text()
    assert text.startswith("% witness:")
    assert r.record().endswith(f"FILE {r.path}")
    adf = parse_adf(text)
    assert any(v not in enumerate_semantics(adf, "prf") for v in enumerate_semantics(adf, "com"))


def test_forward_checks_hold_on_small_corpus():
    assert all(r.ok for r in check_existence(SMALL))
    g = check_grounded_uniqueness(SMALL)
    assert g.status == "holds" and g.trials == SMALL.trials


def test_suite_is_reproducible():
    a = [r.record() for r in run_suite(SMALL)]
    b = [r.record() for r in run_suite(SMALL)]
    assert a == b


def test_suite_outcomes_on_small_corpus():
    reports = run_suite(GenConfig(n_statements=4, trials=150, seed=0))
    assert [r.name for r in reports if not r.ok] == []


def test_trials_share_enumeration_cache():
    t = build_trials(GenConfig(n_statements=3, trials=1))[0]
    assert t.sem(Semantics.COMPLETE) is t.sem(Semantics.COMPLETE)
