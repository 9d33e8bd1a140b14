from collections import Counter

import pytest

from semiwedge.exterior import WedgeElement
from semiwedge.partitions import pieri
from semiwedge.schubert import compare_series
from semiwedge.semiring import NAT
from semiwedge.verify import (CheckConfig, check_clifford_relations, check_lem633, check_lemma433,
                              check_main_theorem, check_pieri, check_quasi_inverse, check_thm313,
                              check_thm515, instances, lemma433_sides, main_lhs, main_rhs,
                              pinned_main_example, resolve_prefactor, run_suite, thm515_sides)

SMALL = CheckConfig(rmax=2, weight=3, zmax=5, wmax=5)


def verdicts(reports):
    return Counter(r.verdict for r in reports)


def by_instance(reports):
    return {(r.r, r.lam, r.variant): r.verdict for r in reports}


def test_config_validation():
    with pytest.raises(ValueError):
        CheckConfig(checks=("nope",))
    with pytest.raises(ValueError):
        CheckConfig(rmax=0)
    with pytest.raises(ValueError):
        CheckConfig(semirings="bogus")
    assert CheckConfig(semirings="nat,maxplus").semirings == ("nat", "maxplus")
    assert CheckConfig().guard_order(3) == 12


def test_instances_respect_the_rank_bound():
    cfg = CheckConfig(rmax=2, weight=4, n=4)
    assert all(not lam or lam[0] <= 4 - r for r, lam in instances(cfg))
    assert len(list(instances(CheckConfig(rmax=3, weight=6)))) == 46


@pytest.mark.parametrize("check", [check_quasi_inverse, check_thm313, check_lem633,
                                   check_lemma433, check_clifford_relations, check_pieri],
                         ids=lambda f: f.__name__)
@pytest.mark.parametrize("sr", ["nat", "qplus", "maxplus"])
def test_checks_that_hold(check, sr):
    assert verdicts(check(SMALL, sr)) == Counter(holds=len(check(SMALL, sr)))


def test_lemma433_includes_the_x0_case():
    left, right = lemma433_sides(NAT, 1, ())
    assert compare_series(left, right, relation="mutual").verdict == "holds"
    assert not left.coefficient(0, 0)


def test_thm515_small_cases():
    reps = by_instance(check_thm515(CheckConfig(rmax=2, weight=2), "nat"))
    for k in range(3):
        assert reps[(1, (k,) if k else (), "stated")] == "holds"
    assert reps[(2, (), "stated")] == "fails"
    assert reps[(2, (1,), "stated")] == "fails"


def test_thm515_proof_step_holds_one_way():
    reps = check_thm515(SMALL, "nat", variants=("proof",))
    assert verdicts(reps) == Counter(holds=len(reps))
    left, right = thm515_sides(NAT, 2, (1,), "proof")
    assert compare_series(right, left).verdict == "fails"


def test_main_theorem_as_stated_fails_from_r2():
    reps = check_main_theorem(SMALL, "nat", "w_pos")
    assert all(v == "holds" for (r, _, _), v in by_instance(reps).items() if r == 1)
    assert any(v == "fails" for (r, _, _), v in by_instance(reps).items() if r == 2)
    assert resolve_prefactor("nat") == []


def test_main_theorem_derived_form_holds():
    cfg = CheckConfig(rmax=3, weight=3, zmax=5, wmax=5)
    for sr in ("nat", "maxplus"):
        reps = check_main_theorem(cfg, sr, "derived", factored=True)
        assert verdicts(reps) == Counter(holds=len(reps))
        literal = check_main_theorem(cfg, sr, "derived")
        assert verdicts(literal) == Counter(holds=len(literal))


def test_derived_form_is_surpassed_by_the_literal_expansion():
    for r, lam in [(2, ()), (2, (1,)), (3, (1,))]:
        order = 6
        lhs = main_lhs(NAT, r, lam, order)
        rhs = main_rhs(NAT, r, lam, order, "derived")
        assert compare_series(lhs, rhs, 4, 4).verdict == "holds"


def test_factoring_out_sigma_plus_only_drops_balanced_terms():
    for r, lam in [(1, (1,)), (2, ()), (2, (2, 1))]:
        for variant in ("w_pos", "derived"):
            a = main_rhs(NAT, r, lam, 5, variant, factored=True)
            b = main_rhs(NAT, r, lam, 5, variant)
            assert compare_series(a, b, 4).verdict == "holds"
            if r == 1:
                assert compare_series(b, a, 4).verdict == "holds"


def test_pinned_main_example():
    coeff, target = pinned_main_example(NAT)
    assert target.surpassed_by(coeff) and coeff.surpassed_by(target)
    assert coeff == WedgeElement.basis(NAT, (5, 2, 1))


def test_corrupted_pieri_oracle_is_caught():
    def broken(lam, i, r, n=None):
        out = pieri(lam, i, r, n)
        return out[1:] if i == 2 else out
    reps = [r for r in check_pieri(SMALL, "nat", oracle=broken) if r.verdict == "fails"]
    assert reps
    assert reps[0].witness is not None and reps[0].witness["z"] == 2


def test_run_suite_report():
    cfg = CheckConfig(semirings=("nat", "maxplus"), rmax=2, weight=2, zmax=4, wmax=4)
    res = run_suite(cfg)
    data = res.to_json()
    assert data["version"] == 1
    assert set(data["summary"]) == {"holds", "fails", "inconclusive"}
    assert data["header"]["prefactor_resolution"] == {"nat": [], "maxplus": []}
    assert res.exit_code() == 1
    for rep in res.reports:
        if rep.verdict == "fails":
            assert rep.witness and {"z", "w", "key"} <= set(rep.witness)
    # deterministic
    again = run_suite(cfg)
    assert [r.to_json() for r in again.reports] == [r.to_json() for r in res.reports]


def test_run_suite_clean_subset_exits_zero():
    cfg = CheckConfig(rmax=2, weight=2, checks=("thm313", "lem633", "pieri"))
    assert run_suite(cfg).exit_code() == 0
