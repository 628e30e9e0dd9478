"""Lefschetz numbers, zeta functions, and the zeta functional equation."""

import pytest

from endospec.errors import DomainError, InapplicableModelError, ValidityError
from endospec.matrixops import ExactMatrix
from endospec.poly import Poly
from endospec.varieties import abelian_en, generic_model, grassmannian
from endospec.zeta import (
    lefschetz_number,
    lefschetz_number_by_trace,
    zeta_function,
    zeta_functional_equation,
    zeta_series_consistency,
    zeta_to_json,
)

EXAMPLE_A = ExactMatrix([[1, -5], [1, 1]])


def _elliptic(m):
    return abelian_en([[m]], m * m)


def test_lefschetz_multiplication_by_m():
    model = _elliptic(2)
    for n in range(1, 7):
        # fixed points of [m]^n on an elliptic curve: (m**n - 1)**2
        assert lefschetz_number(model, n) == (2**n - 1) ** 2
        assert lefschetz_number_by_trace(model, n) == (2**n - 1) ** 2


def test_lefschetz_example_two_paths():
    model = abelian_en(EXAMPLE_A, 6)
    # L(f) = det(I - f|H1) = det(I - A)**2 = (1 - 2 + 6)**2
    assert lefschetz_number(model, 1) == 25
    for n in range(1, 6):
        assert lefschetz_number(model, n) == lefschetz_number_by_trace(model, n)


def test_lefschetz_grassmannian_closed_forms():
    scalar = grassmannian(2, 4, 4)
    swap = grassmannian(2, 4, 4, "involution")
    for n in range(1, 5):
        base = 1 + 4**n + 64**n + 256**n
        assert lefschetz_number(scalar, n) == base + 2 * 16**n
        middle = 2 * 16**n if n % 2 == 0 else 0
        assert lefschetz_number(swap, n) == base + middle
        assert lefschetz_number_by_trace(swap, n) == base + middle


def test_lefschetz_preconditions():
    model = _elliptic(2)
    with pytest.raises(DomainError):
        lefschetz_number(model, 0)
    bare = generic_model(
        1,
        4,
        charpolys={
            0: Poly.from_desc([1, -1]),
            1: Poly.from_desc([1, -4, 4]),
            2: Poly.from_desc([1, -4]),
        },
    )
    assert lefschetz_number(bare, 1) == 1
    with pytest.raises(ValidityError):
        lefschetz_number_by_trace(bare, 1)


def test_zeta_function_structure():
    zf = zeta_function(grassmannian(1, 2, 5))
    assert zf.numerator == Poly([1])
    # independent build of (1 - t)(1 - 5t) from ascending coefficients
    assert zf.denominator == Poly([1, -1]) * Poly([1, -5])
    assert zf.chi == 2
    assert zeta_to_json(zf) == {
        "numerator": ["1"],
        "denominator": ["5", "-6", "1"],
        "chi": 2,
    }


def test_zeta_degree_and_normalization():
    for model in (_elliptic(3), abelian_en(EXAMPLE_A, 6), grassmannian(2, 4, 4)):
        zf = zeta_function(model)
        b = model.betti_numbers
        assert zf.numerator.degree == sum(b[1::2])
        assert zf.denominator.degree == sum(b[0::2])
        assert zf.denominator.degree - zf.numerator.degree == zf.chi
        assert zf.numerator.coeff(0) == 1
        assert zf.denominator.coeff(0) == 1


def test_zeta_grassmannian_denominator():
    zf = zeta_function(grassmannian(2, 4, 4))
    expected = Poly([1])
    for root in (1, 4, 16, 16, 64, 256):
        expected = expected * Poly([1, -root])
    assert zf.denominator == expected


def test_zeta_series_consistency():
    assert zeta_series_consistency(_elliptic(2), 8)
    assert zeta_series_consistency(abelian_en(EXAMPLE_A, 6), 6)
    assert zeta_series_consistency(grassmannian(2, 4, 4, "involution"), 6)
    with pytest.raises(DomainError):
        zeta_series_consistency(_elliptic(2), 0)


def test_zeta_functional_equation_elliptic():
    res = zeta_functional_equation(_elliptic(2))
    assert res
    assert res.sign == 1
    assert res.expected_sign == 1
    assert res.mu == 0
    assert res.chi == 0


def test_zeta_functional_equation_example():
    res = zeta_functional_equation(abelian_en(EXAMPLE_A, 6))
    assert res.holds
    assert res.chi == 0
    assert res.mu == 0
    assert res.sign == 1


def test_zeta_functional_equation_grassmannian_variants():
    scalar = zeta_functional_equation(grassmannian(2, 4, 4))
    assert scalar.holds
    assert scalar.chi == 6
    assert scalar.mu == 0
    assert scalar.sign == 1
    swap = zeta_functional_equation(grassmannian(2, 4, 4, "involution"))
    assert swap.holds
    # -q**2 is an eigenvalue of the middle involution, flipping the sign
    assert swap.mu == 1
    assert swap.sign == -1
    assert swap.expected_sign == -1


def test_zeta_functional_equation_odd_chi():
    res = zeta_functional_equation(grassmannian(1, 2, 9))
    assert res.holds
    assert res.chi == 2
    assert res.sign == 1


def test_zeta_functional_equation_rejects_broken_weights():
    broken = generic_model(
        1,
        6,
        charpolys={
            0: Poly.from_desc([1, -1]),
            1: Poly.from_desc([1, -5, 4]),
            2: Poly.from_desc([1, -6]),
        },
    )
    with pytest.raises(InapplicableModelError):
        zeta_functional_equation(broken)
