"""Weil weight check, epsilon congruence, and full report orchestration."""

import json
from fractions import Fraction

import pytest

from endospec.errors import DomainError, ValidityError
from endospec.matrixops import ExactMatrix
from endospec.poly import Poly
from endospec.varieties import abelian_en, generic_model, grassmannian
from endospec.verify import (
    ADVISORY_CHECKS,
    epsilon_congruence_check,
    full_report,
    weil_weight_check,
)

EXAMPLE_A = ExactMatrix([[1, -5], [1, 1]])
EXAMPLE_P1 = Poly.from_desc([1, -4, 16, -24, 36])


def test_weil_weight_passes():
    assert weil_weight_check(EXAMPLE_P1, 6, 1)
    assert weil_weight_check(Poly.from_desc([1, -4, 4]), 4, 1)
    assert weil_weight_check(Poly.from_desc([1, -36]), 6, 4)
    assert weil_weight_check(Poly.from_desc([1]), 6, 3)


def test_weil_weight_detects_wrong_modulus():
    res = weil_weight_check(Poly.from_desc([1, -2]), 6, 1)
    assert not res
    assert res.failing_root is not None
    assert "modulus" in res.reason
    both = weil_weight_check(Poly.from_desc([1, -5, 6]), 6, 1)
    assert not both
    # worst offender is the root 3: |9 - 6| / 6
    assert both.failing_root.startswith("3.0")


def test_weil_weight_exact_condition_catches_tiny_drift():
    # roots sit within 1e-21 of the right circle, below the numeric
    # tolerance, so only the exact coefficient condition can object
    drifted = Poly([Fraction(4) + Fraction(1, 10**21), Fraction(-4), Fraction(1)])
    res = weil_weight_check(drifted, 4, 1)
    assert not res
    assert res.failing_root is None
    assert "functional equation" in res.reason


def test_weil_weight_preconditions():
    with pytest.raises(DomainError):
        weil_weight_check(EXAMPLE_P1, 6, 1, precision_digits=20)
    with pytest.raises(ValidityError):
        weil_weight_check(Poly.from_desc([2, -1]), 6, 1)
    with pytest.raises(ValidityError):
        weil_weight_check(Poly.from_desc([1, -1, 0]), 6, 1)


def test_epsilon_congruence_examples():
    res = epsilon_congruence_check(EXAMPLE_P1, 6, 1)
    assert res.holds
    assert (res.epsilon, res.betti, res.mu_minus) == (0, 4, 0)
    neg = epsilon_congruence_check(Poly.from_desc([1, 4]), 4, 2)
    assert neg.holds
    assert (neg.epsilon, neg.betti, neg.mu_minus) == (0, 1, 1)


def test_epsilon_congruence_odd_degree_sign():
    # t**2 - 6 passes its functional equation with sign -1, which an odd
    # degree forbids even though the parity count matches
    res = epsilon_congruence_check(Poly.from_desc([1, 0, -6]), 6, 1)
    assert not res.holds
    assert res.epsilon == 1
    assert res.mu_minus == 1


def test_epsilon_congruence_needs_functional_equation():
    with pytest.raises(ValidityError):
        epsilon_congruence_check(Poly.from_desc([1, -5, 4]), 6, 1)


def _result_map(report):
    out = {}
    for r in report.results:
        out.setdefault(r.check_id, []).append(r)
    return out


def test_full_report_example_all_pass():
    model = abelian_en(EXAMPLE_A, 6)
    report = full_report(model, [2, 3])
    assert not report.has_failures
    assert len(report.results) == 6 * 5 + 3 * 5 * 2 + 1
    assert all(r.status in ("pass", "not-applicable") for r in report.results)
    by_id = _result_map(report)
    assert [r.status for r in by_id["functional_equation"]] == ["pass"] * 5
    assert [r.status for r in by_id["jordan_symmetry"]] == ["pass"] * 5
    assert [r.status for r in by_id["zeta_functional_equation"]] == ["pass"]
    # primes dividing q: slope-zero refuses, symmetry and comparison run
    assert all(r.status == "not-applicable" for r in by_id["newton_slope_zero"])
    assert [r.status for r in by_id["newton_symmetry"]] == ["pass"] * 10
    assert [r.status for r in by_id["newton_over_hodge"]] == ["pass"] * 10


def test_full_report_example_degree_table():
    report = full_report(abelian_en(EXAMPLE_A, 6), [2, 3])
    row = report.degree_table[1]
    assert row["betti"] == 4
    assert row["charpoly"] == ["1", "-4", "16", "-24", "36"]
    assert row["epsilon"] == 0
    assert row["mu_plus"] == 0 and row["mu_minus"] == 0
    assert row["newton_polygons"]["2"] == [[0, "0"], [4, "2"]]
    assert row["newton_polygons"]["3"] == [[0, "0"], [2, "0"], [4, "2"]]
    assert row["hodge_polygon"] == [[0, "0"], [2, "0"], [4, "2"]]
    assert report.model_summary["kind"] == "abelian"
    assert report.model_summary["polarization_verified"] is True
    assert report.zeta["chi"] == 0


def test_full_report_deterministic():
    a = full_report(abelian_en(EXAMPLE_A, 6), [2, 3]).to_json()
    b = full_report(abelian_en(ExactMatrix([[1, -5], [1, 1]]), 6), [2, 3]).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_full_report_prime_not_dividing_q():
    report = full_report(abelian_en(EXAMPLE_A, 6), [5])
    by_id = _result_map(report)
    assert [r.status for r in by_id["newton_slope_zero"]] == ["pass"] * 5
    assert all(r.status == "not-applicable" for r in by_id["newton_symmetry"])
    assert all(r.status == "not-applicable" for r in by_id["newton_over_hodge"])
    assert not report.has_failures


def test_full_report_grassmannian_involution():
    model = grassmannian(2, 4, 4, "involution")
    report = full_report(model, [2])
    assert not report.has_failures
    assert len(report.results) == 6 * 9 + 3 * 9 + 1
    by_id = _result_map(report)
    # odd degrees carry no cohomology
    na = [r for r in by_id["functional_equation"] if r.status == "not-applicable"]
    assert [r.degree for r in na] == [1, 3, 5, 7]
    hodge_cmp = [r for r in by_id["newton_over_hodge"] if r.status == "pass"]
    assert all(dict(r.witness)["identical"] for r in hodge_cmp)
    assert report.model_summary["variant"] == "involution"


def test_full_report_corrupted_middle_polynomial():
    polys = {i: abelian_en(EXAMPLE_A, 6).charpoly(i) for i in range(5)}
    polys[1] = Poly.from_desc([1, -4, 16, -24, 35])
    model = generic_model(2, 6, charpolys=polys, strict=True)
    report = full_report(model, [2])
    assert report.has_failures
    by_id = _result_map(report)
    fe1 = next(r for r in by_id["functional_equation"] if r.degree == 1)
    assert fe1.status == "fail"
    assert dict(fe1.witness)["failure_index"] == 0
    eps1 = next(r for r in by_id["epsilon_congruence"] if r.degree == 1)
    assert eps1.status == "not-applicable"
    cd1 = next(r for r in by_id["cross_duality"] if r.degree == 1)
    assert cd1.status == "fail"
    cd3 = next(r for r in by_id["cross_duality"] if r.degree == 3)
    assert cd3.status == "fail"
    ww1 = next(r for r in by_id["weil_weight"] if r.degree == 1)
    assert ww1.status == "fail"
    # the zeta equation refuses to run on broken weights
    assert by_id["zeta_functional_equation"][0].status == "not-applicable"


def test_advisory_failure_does_not_fail_report():
    assert ADVISORY_CHECKS == {"newton_over_hodge"}
    model = generic_model(
        1,
        4,
        charpolys={
            0: Poly.from_desc([1, -1]),
            1: Poly.from_desc([1, -4, 4]),
            2: Poly.from_desc([1, -4]),
        },
        hodge=[[1], [0, 2], [0, 1, 0]],
    )
    report = full_report(model, [2])
    by_id = _result_map(report)
    nh1 = next(r for r in by_id["newton_over_hodge"] if r.degree == 1)
    assert nh1.status == "fail"
    assert dict(nh1.witness)["endpoint_equal"] is False
    assert not report.has_failures


def test_full_report_without_matrices_or_hodge():
    model = generic_model(
        1,
        4,
        charpolys={
            0: Poly.from_desc([1, -1]),
            1: Poly.from_desc([1, -4, 4]),
            2: Poly.from_desc([1, -4]),
        },
    )
    report = full_report(model, [2, 3])
    by_id = _result_map(report)
    assert all(r.status == "not-applicable" for r in by_id["jordan_symmetry"])
    assert all(r.status == "not-applicable" for r in by_id["newton_over_hodge"])
    assert not report.has_failures


def test_full_report_input_validation():
    model = abelian_en([[2]], 4)
    with pytest.raises(DomainError):
        full_report(model, [4])
    with pytest.raises(ValidityError):
        full_report(model, [])


def test_check_result_serialization():
    report = full_report(abelian_en([[2]], 4), [2])
    payload = report.to_json()
    assert set(payload) == {"model", "checks", "degrees", "zeta"}
    primes_seen = {c.get("prime") for c in payload["checks"] if "prime" in c}
    assert primes_seen == {"2"}
    assert all(isinstance(c["check"], str) for c in payload["checks"])
    json.dumps(payload)
