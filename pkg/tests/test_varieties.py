"""Concrete variety models: abelian, Grassmannian, and generic."""

from fractions import Fraction
from math import comb

import pytest

from endospec.errors import (
    ConsistencyError,
    ShapeError,
    SingularActionError,
    ValidityError,
)
from endospec.matrixops import ExactMatrix
from endospec.poly import Poly, charpoly
from endospec.varieties import (
    abelian_en,
    abelian_from_h1,
    box_partitions,
    generic_model,
    grassmannian,
    has_hodge_data,
)

# isogeny matrix of the running abelian surface example, q = 6
EXAMPLE_A = ExactMatrix([[1, -5], [1, 1]])


def test_abelian_from_h1_scalar():
    m = abelian_from_h1(1, [[2, 0], [0, 2]], 4)
    assert m.kind == "abelian"
    assert m.dimension == 1
    assert m.betti_numbers == [1, 2, 1]
    assert m.charpoly(0) == Poly.from_desc([1, -1])
    assert m.charpoly(1) == Poly.from_desc([1, -4, 4])
    assert m.charpoly(2) == Poly.from_desc([1, -4])
    assert m.hodge == ((1,), (1, 1), (0, 1, 0))
    assert m.euler_characteristic == 0
    assert has_hodge_data(m, 1)


def test_abelian_from_h1_rotation():
    m = abelian_from_h1(1, [[0, -2], [1, 0]], 2)
    assert m.charpoly(1) == Poly.from_desc([1, 0, 2])
    assert m.charpoly(2) == Poly.from_desc([1, -2])


def test_abelian_from_h1_errors():
    with pytest.raises(ShapeError):
        abelian_from_h1(1, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 2)
    with pytest.raises(SingularActionError):
        abelian_from_h1(1, [[1, 1], [1, 1]], 2)
    with pytest.raises(ValidityError):
        abelian_from_h1(1, [[Fraction(1, 2), 0], [0, 2]], 2)
    with pytest.raises(ValidityError):
        abelian_from_h1(1, [[2, 0], [0, 2]], 1)


def test_abelian_example_surface():
    m = abelian_en(EXAMPLE_A, 6)
    assert m.dimension == 2
    assert m.betti_numbers == [comb(4, i) for i in range(5)]
    assert m.charpoly(1) == Poly.from_desc([1, -4, 16, -24, 36])
    # degree-1 eigenvalues are l, lbar twice each with l*lbar = 6,
    # so the degree-2 roots are l**2, lbar**2 and 6 four times
    assert m.charpoly(2) == Poly.from_desc([1, 8, 36]) * Poly.from_desc([1, -6]) ** 4
    assert m.charpoly(3) == Poly.from_desc([1, -24, 576, -5184, 46656])
    assert m.charpoly(4) == Poly.from_desc([1, -36])
    assert m.hodge[1] == (2, 2)
    assert m.hodge[2] == (1, 4, 1)


def test_abelian_en_polarization_metadata():
    m = abelian_en(EXAMPLE_A, 6)
    assert m.metadata["isogeny_matrix"] == EXAMPLE_A
    assert m.metadata["polarization_verified"]
    D = m.metadata["polarization_witness"]
    assert EXAMPLE_A.transpose() @ D @ EXAMPLE_A == D * 6
    plain = abelian_en([[2, 0], [0, 3]], 6)
    assert not plain.metadata["polarization_verified"]
    assert plain.metadata["polarization_witness"] is None


def test_abelian_en_multiplication_by_m():
    m = abelian_en([[3]], 9)
    assert m.dimension == 1
    assert m.charpoly(1) == Poly.from_desc([1, -6, 9])
    assert m.charpoly(2) == Poly.from_desc([1, -9])
    assert m.metadata["polarization_verified"]


def test_abelian_en_matches_h1_construction():
    direct = abelian_from_h1(2, EXAMPLE_A.kron(ExactMatrix.identity(2)), 6)
    en = abelian_en(EXAMPLE_A, 6)
    for i in range(5):
        assert en.charpoly(i) == direct.charpoly(i)
        assert en.matrix(i) == direct.matrix(i)
    assert en.hodge == direct.hodge


def test_grassmannian_projective_line():
    m = grassmannian(1, 2, 5)
    assert m.dimension == 1
    assert m.betti_numbers == [1, 0, 1]
    assert m.charpoly(2) == Poly.from_desc([1, -5])
    assert m.charpoly(1) == Poly([1])
    assert m.hodge[2] == (0, 1, 0)
    assert m.metadata == {"k": 1, "n": 2, "variant": "scalar"}


def test_grassmannian_g24_scalar():
    m = grassmannian(2, 4, 4)
    assert m.dimension == 4
    assert m.betti_numbers == [1, 0, 1, 0, 2, 0, 1, 0, 1]
    assert m.euler_characteristic == comb(4, 2)
    assert m.charpoly(4) == Poly.from_desc([1, -32, 256])
    assert m.charpoly(8) == Poly.from_desc([1, -256])
    assert m.matrix(4) == ExactMatrix.diagonal([16, 16])
    assert m.hodge[4] == (0, 0, 2, 0, 0)


def test_grassmannian_g24_involution():
    m = grassmannian(2, 4, 4, "involution")
    # conjugation swaps the two partitions of 2 in the 2x2 box
    assert m.charpoly(4) == Poly.from_desc([1, 0, -256])
    assert m.matrix(4) == ExactMatrix([[0, 16], [16, 0]])
    assert m.charpoly(2) == Poly.from_desc([1, -4])
    for i in (0, 2, 4, 6, 8):
        M = m.matrix(i)
        j = i // 2
        assert M @ M == ExactMatrix.diagonal([m.q ** (2 * j)] * m.betti(i))


def test_grassmannian_variant_errors():
    with pytest.raises(ValidityError):
        grassmannian(1, 3, 2, "involution")
    with pytest.raises(ValidityError):
        grassmannian(2, 2, 2)
    with pytest.raises(ValidityError):
        grassmannian(1, 2, 1)
    with pytest.raises(ValidityError):
        grassmannian(1, 2, 2, "twist")


def test_grassmannian_betti_family():
    for n in range(2, 9):
        for k in range(1, n):
            m = grassmannian(k, n, 3)
            assert m.dimension == k * (n - k)
            assert m.euler_characteristic == comb(n, k)
            b = m.betti_numbers
            assert all(b[i] == b[2 * m.dimension - i] for i in range(len(b)))
            assert all(b[i] == 0 for i in range(1, len(b), 2))


def test_box_partitions():
    assert [len(box_partitions(2, 2, s)) for s in range(5)] == [1, 1, 2, 1, 1]
    assert box_partitions(2, 2, 2) == [(2,), (1, 1)]
    assert box_partitions(2, 3, 3) == [(3,), (2, 1)]
    assert box_partitions(1, 4, 5) == []


def test_generic_model_from_polynomials():
    m = generic_model(
        1,
        4,
        charpolys={
            0: Poly.from_desc([1, -1]),
            1: Poly.from_desc([1, -4, 4]),
            2: Poly.from_desc([1, -4]),
        },
        hodge=[[1], [1, 1], [0, 1, 0]],
    )
    assert m.kind == "generic"
    assert m.betti_numbers == [1, 2, 1]
    assert m.metadata["warnings"] == []
    assert has_hodge_data(m, 1)


def test_generic_model_from_matrices():
    m = generic_model(
        1,
        4,
        charpolys={0: Poly.from_desc([1, -1]), 2: Poly.from_desc([1, -4])},
        matrices={1: [[2, 0], [0, 2]]},
    )
    assert m.charpoly(1) == Poly.from_desc([1, -4, 4])
    assert m.matrix(1) == ExactMatrix([[2, 0], [0, 2]])
    assert not has_hodge_data(m, 1)


def test_generic_model_strict_policy():
    bad_ends = {
        0: Poly.from_desc([1, -2]),
        1: Poly.from_desc([1, -4, 4]),
        2: Poly.from_desc([1, -4]),
    }
    with pytest.raises(ValidityError):
        generic_model(1, 4, charpolys=bad_ends)
    m = generic_model(1, 4, charpolys=bad_ends, strict=False)
    assert len(m.metadata["warnings"]) == 1
    assert "degree 0" in m.metadata["warnings"][0]


def test_generic_model_errors():
    with pytest.raises(ValidityError):
        generic_model(1, 4, charpolys={0: Poly.from_desc([1, -1])})
    with pytest.raises(ConsistencyError):
        generic_model(
            1,
            4,
            charpolys={
                0: Poly.from_desc([1, -1]),
                1: Poly.from_desc([1, 0, 1]),
                2: Poly.from_desc([1, -4]),
            },
            matrices={1: [[2, 0], [0, 2]]},
        )
    with pytest.raises(SingularActionError):
        generic_model(
            1,
            4,
            charpolys={
                0: Poly.from_desc([1, -1]),
                1: Poly.from_desc([1, -2, 0]),
                2: Poly.from_desc([1, -4]),
            },
        )
    # Betti duality b_0 = b_2 enforced at the model level
    with pytest.raises(ValidityError):
        generic_model(
            1,
            4,
            charpolys={
                0: Poly.from_desc([1, -1]),
                1: Poly.from_desc([1, -4, 4]),
                2: Poly.from_desc([1, -5, 4]),
            },
            strict=False,
        )
