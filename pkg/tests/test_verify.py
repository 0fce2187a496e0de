import random

import pytest

from g2cluster import g2rep as rep
from g2cluster import seeds
from g2cluster.mutation import BipartiteBelt, DegreeVector
from g2cluster.verify import (Engine, bridge_evaluate, clear_denominators,
                              exit_status, infer_degree_bridge,
                              reports_to_json, xi_descendants, xi_polynomial)


@pytest.fixture(scope="module")
def engine():
    return Engine(trials=6, rng_seed=7, mode="randomized", rmin=-4, rmax=4)


def test_bridge_initial_variable(engine):
    g = engine.points()[0]
    s = seeds.seed_under(1)
    assign = seeds.assignment("under", 1)
    got = bridge_evaluate(s.entry(-3), assign, g)
    want = rep.evaluate_function(rep.named_function("Delta_w1"), g)
    assert got == want


def test_bridge_mutated_vertex(engine):
    s = seeds.seed_under(1).mutate(3)
    assign = seeds.assignment("under", 1)
    for g in engine.points():
        got = bridge_evaluate(s.entry(3), assign, g)
        v = {n: rep.evaluate_function(rep.named_function(n), g)
             for n in ("Delta_s1_w1", "Delta_s2s1_w1", "Delta_w1", "X0")}
        assert got == (v["Delta_s1_w1"] * v["Delta_s2s1_w1"]
                       - v["Delta_w1"] * v["X0"])


def test_bridge_frozen_invariance(engine):
    g = engine.points()[1]
    assign = seeds.assignment("under", 2)
    s = seeds.seed_under(2)
    t = s.apply([3, 2, 1, 3])
    for lab in (-1, -2, -3):
        assert bridge_evaluate(t.entry(lab), assign, g) == \
            bridge_evaluate(s.entry(lab), assign, g)


def test_bridge_mutation_commutes_with_exchange(engine):
    # bridging the mutated variable equals applying the exchange relation to
    # the bridged values directly
    g = engine.points()[2]
    assign = seeds.assignment("under", 1)
    s = seeds.seed_under(1)
    vals = {var: bridge_evaluate(s.entry(lab), assign, g)
            for lab, var in zip(s.matrix.row_labels, s.names)}
    for k in (1, 2, 3):
        plus, minus = 1, 1
        for lab, var in zip(s.matrix.row_labels, s.names):
            b = s.matrix.entry(lab, k)
            if b > 0:
                plus *= vals[var] ** b
            elif b < 0:
                minus *= vals[var] ** (-b)
        direct = (plus + minus) / vals[s.name_of(k)]
        assert bridge_evaluate(s.mutate(k).entry(k), assign, g) == direct


def test_clear_denominators():
    s = seeds.seed_under(1).mutate(3)
    num, shift = clear_denominators(s.entry(3))
    assert shift == (0, 0, 1, 0, 0, 0)
    assert all(e >= 0 for exps in num.terms for e in exps)


def test_xi_vanishes_on_group_but_not_as_polynomial(engine):
    xi = xi_polynomial()
    assert not xi.is_zero()
    for g in engine.points():
        assert rep.evaluate_function(xi, g) == 0
    assert rep.evaluate_function(xi, rep.symbolic_dense_point()).is_zero()


def test_xi_descendant_count_and_dedup():
    shallow = xi_descendants(2)
    deeper = xi_descendants(4)
    assert len(shallow) < len(deeper)
    assert len(set(shallow)) == len(shallow)


def test_identities_suite_passes(engine):
    reports = engine.suite_identities()
    assert all(r.status == "pass" for r in reports), [
        (r.check_id, r.details) for r in reports if r.status != "pass"]
    ids = {r.check_id for r in reports}
    for tag in ("D1", "D2", "D3", "D4", "P1", "P2", "P3", "P4", "P5", "P6"):
        assert f"identities.{tag}" in ids


def test_lemmas_suite(engine):
    reports = engine.suite_lemmas()
    assert exit_status(reports) == 0
    by_id = {r.check_id: r for r in reports}
    assert by_id["lemmas.flag.b33"].status == "flagged"
    assert by_id["lemmas.case1.X4'"].status == "pass"
    assert by_id["lemmas.case2.freeze"].status == "pass"


def test_gls_suite(engine):
    reports = engine.suite_gls()
    assert exit_status(reports) == 0
    ids = {r.check_id for r in reports}
    for case in (1, 2):
        for tag in ("step-a", "step-b", "step-c", "step-d", "matrix-mid",
                    "matrix-final", "cluster-final"):
            assert f"gls.case{case}.{tag}" in ids


def test_belt_suite_small_range(engine):
    reports = engine.suite_belt()
    assert exit_status(reports) == 0
    by_id = {r.check_id: r for r in reports}
    assert by_id["belt.case1.degrees.bridge"].status == "pass"
    assert by_id["belt.case2.degrees.recurrence"].status == "pass"
    # milestones inside [-4, 4] only when the range covers them; U and Z are
    # checked regardless
    assert by_id["belt.case2.U"].status == "pass"
    assert by_id["belt.case2.Z"].status == "pass"


def test_dictionary_suite(engine):
    reports = engine.suite_dictionary()
    assert exit_status(reports) == 0
    assert any(r.check_id == "dictionary.case2.plucker" for r in reports)


def test_equivalence_suite(engine):
    reports = engine.suite_equivalence()
    assert len(reports) == 1 and reports[0].status == "flagged"
    assert "relabelling" in reports[0].details


def test_infer_degree_bridge_milestones():
    rng = random.Random(11)
    assign = seeds.assignment("under", 1)
    belt = BipartiteBelt(seeds.belt_base(1))
    got = infer_degree_bridge(belt.seed(-3).entry(1), assign, 1, rng)
    assert got == DegreeVector(1, 1, 1)
    assign2 = seeds.assignment("under", 2)
    belt2 = BipartiteBelt(seeds.belt_base(2))
    got = infer_degree_bridge(belt2.seed(-3).entry(1), assign2, 2, rng)
    assert got == DegreeVector(1, 3, 1)


def test_reports_sorted_and_json_stable(engine):
    reports = engine.run(["criterion"])
    ids = [r.check_id for r in reports]
    assert ids == sorted(ids)
    js = reports_to_json(reports)
    assert js == reports_to_json(engine.run(["criterion"]))


def test_failure_carries_counterexample(engine):
    # an intentionally false identity must fail with a counterexample
    report = engine._expr_check(
        "scratch.false", "deliberately false",
        lambda v: v["Delta_w1"] * 2, lambda v: v["Delta_w1"])
    assert report.status == "fail"
    assert report.counterexample is not None
    assert "word" in report.counterexample


def test_unknown_suite_rejected(engine):
    with pytest.raises(ValueError):
        engine.run(["nonsense"])


def test_jobs_parallel_matches_serial(engine):
    serial = reports_to_json(engine.run(["criterion", "minors"]))
    parallel = reports_to_json(engine.run(["criterion", "minors"], jobs=2))
    assert serial == parallel


def test_check_ids_unique_and_claims_fixed(engine):
    reports = engine.run(["all"])
    ids = [r.check_id for r in reports]
    assert len(ids) == len(set(ids))
    claims = {r.check_id: r.claim for r in reports}
    again = {r.check_id: r.claim for r in engine.run(["all"])}
    assert claims == again
