"""Concrete variety models producing per-degree cohomology actions, Betti
numbers, and Hodge numbers: abelian varieties (a raw degree-1 matrix or an
isogeny matrix on a power of an elliptic curve), Grassmannians, and a
generic user-supplied model.

A model is the bundle the verification layer consumes: for every degree
0..2d a monic characteristic polynomial, optionally the acting matrix, and
per-weight Hodge number lists.
"""

from dataclasses import dataclass, field
from math import comb
from typing import Optional

from endospec.errors import (
    ConsistencyError,
    ShapeError,
    SingularActionError,
    ValidityError,
)
from endospec.matrixops import ExactMatrix, exterior_power, polarization_witness
from endospec.poly import Poly, charpoly


@dataclass(frozen=True)
class CohomologyAction:
    degree: int
    betti: int
    charpoly: Poly
    matrix: Optional[ExactMatrix] = None


def _action(degree, poly, matrix=None, check_matrix=True):
    if poly.degree != max(poly.degree, 0) or not poly.is_monic():
        raise ValidityError(f"degree {degree}: polynomial must be monic")
    betti = poly.degree
    if betti >= 1 and poly.coeff(0) == 0:
        raise SingularActionError(
            f"degree {degree}: zero constant term, action is not invertible"
        )
    if matrix is not None:
        if not matrix.is_square or matrix.nrows != betti:
            raise ShapeError(
                f"degree {degree}: matrix size {matrix.nrows} != betti {betti}"
            )
        if check_matrix and charpoly(matrix.rows) != poly:
            raise ConsistencyError(
                f"degree {degree}: matrix does not realize the polynomial"
            )
    return CohomologyAction(degree=degree, betti=betti, charpoly=poly, matrix=matrix)


@dataclass
class VarietyModel:
    kind: str
    dimension: int
    q: int
    actions: tuple
    hodge: tuple
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        d = self.dimension
        if self.q <= 1:
            raise ValidityError("q must exceed 1")
        if len(self.actions) != 2 * d + 1:
            raise ValidityError("actions must cover degrees 0..2d")
        if len(self.hodge) != 2 * d + 1:
            raise ValidityError("hodge lists must cover degrees 0..2d")
        for i, act in enumerate(self.actions):
            if act.degree != i:
                raise ValidityError(f"action at index {i} claims degree {act.degree}")
            if len(self.hodge[i]) != i + 1:
                raise ShapeError(f"weight {i} needs {i + 1} Hodge numbers")
        for i in range(2 * d + 1):
            if self.actions[i].betti != self.actions[2 * d - i].betti:
                raise ValidityError(
                    f"Betti duality broken: b_{i} != b_{2 * d - i}"
                )

    def action(self, i):
        return self.actions[i]

    def betti(self, i):
        return self.actions[i].betti

    def charpoly(self, i):
        return self.actions[i].charpoly

    def matrix(self, i):
        return self.actions[i].matrix

    @property
    def betti_numbers(self):
        return [a.betti for a in self.actions]

    @property
    def euler_characteristic(self):
        return sum((-1) ** i * a.betti for i, a in enumerate(self.actions))


def _abelian_hodge(d):
    return tuple(
        tuple(comb(d, j) * comb(d, i - j) for j in range(i + 1))
        for i in range(2 * d + 1)
    )


def abelian_from_h1(d, M, q, kind="abelian", metadata=None):
    """Abelian model from the degree-1 action: degree i acts by the i-th
    exterior power, so Betti numbers are binomial and Hodge numbers are
    products of binomials."""
    if not isinstance(M, ExactMatrix):
        M = ExactMatrix(M)
    if not M.is_square or M.nrows != 2 * d:
        raise ShapeError(f"degree-1 action must be {2 * d}x{2 * d}")
    if not M.is_integer():
        raise ValidityError("degree-1 action must have integer entries")
    if M.det() == 0:
        raise SingularActionError("degree-1 action is singular")
    actions = [_action(0, Poly.from_desc([1, -1]), ExactMatrix([[1]]))]
    for i in range(1, 2 * d + 1):
        Li = exterior_power(M, i)
        actions.append(_action(i, charpoly(Li.rows), Li, check_matrix=False))
    return VarietyModel(
        kind=kind,
        dimension=d,
        q=q,
        actions=tuple(actions),
        hodge=_abelian_hodge(d),
        metadata=metadata or {},
    )


def abelian_en(A, q):
    """Power-of-an-elliptic-curve model from an n x n integer isogeny
    matrix: the degree-1 action is A tensor I2 and P_1 = charpoly(A)**2.

    The polarization witness search runs on A itself; its outcome travels
    in the metadata rather than gating construction."""
    if not isinstance(A, ExactMatrix):
        A = ExactMatrix(A)
    if not A.is_square:
        raise ShapeError("isogeny matrix must be square")
    if A.det() == 0:
        raise SingularActionError("isogeny matrix is singular")
    n = A.nrows
    M = A.kron(ExactMatrix.identity(2))
    witness = polarization_witness(A, q)
    metadata = {
        "isogeny_matrix": A,
        "polarization_witness": witness,
        "polarization_verified": witness is not None,
    }
    return abelian_from_h1(n, M, q, kind="abelian", metadata=metadata)


def box_partitions(rows, cols, size):
    """Partitions of `size` with at most `rows` parts, each at most `cols`,
    as nonincreasing tuples in descending lexicographic order."""
    out = []

    def rec(remaining, cap, parts):
        if remaining == 0:
            out.append(tuple(parts))
            return
        if len(parts) == rows:
            return
        for p in range(min(cap, remaining), 0, -1):
            parts.append(p)
            rec(remaining - p, p, parts)
            parts.pop()

    rec(size, cols, [])
    return out


def _conjugate(partition):
    if not partition:
        return ()
    return tuple(
        sum(1 for p in partition if p >= i) for i in range(1, partition[0] + 1)
    )


def grassmannian(k, n, q, variant="scalar"):
    """Grassmannian model: cohomology sits in even degrees with Betti number
    b_{2j} = number of partitions of j in a k x (n-k) box, all Hodge weight
    concentrated on h^{j,j}. The degree-2j action is q**j times either the
    identity or the conjugation permutation on box partitions (the latter
    only defined when n = 2k)."""
    if not 1 <= k < n:
        raise ValidityError(f"need 1 <= k < n, got k={k}, n={n}")
    if q <= 1:
        raise ValidityError("q must exceed 1")
    if variant not in ("scalar", "involution"):
        raise ValidityError(f"unknown variant {variant!r}")
    if variant == "involution" and n != 2 * k:
        raise ValidityError("the involution variant needs n = 2k")
    d = k * (n - k)
    actions = []
    hodge = []
    for i in range(2 * d + 1):
        if i % 2 == 1:
            actions.append(_action(i, Poly([1])))
            hodge.append(tuple([0] * (i + 1)))
            continue
        j = i // 2
        parts = box_partitions(k, n - k, j)
        b = len(parts)
        if b == 0:
            actions.append(_action(i, Poly([1])))
            hodge.append(tuple([0] * (i + 1)))
            continue
        scale = q**j
        if variant == "scalar":
            mat = ExactMatrix.diagonal([scale] * b)
            poly = Poly.from_roots([scale] * b)
        else:
            index = {p: idx for idx, p in enumerate(parts)}
            perm = [index[_conjugate(p)] for p in parts]
            rows = [[0] * b for _ in range(b)]
            for src, dst in enumerate(perm):
                rows[dst][src] = scale
            mat = ExactMatrix(rows)
            fixed = sum(1 for idx, p in enumerate(perm) if p == idx)
            cycles = (b - fixed) // 2
            poly = Poly.from_roots([scale] * fixed) * Poly.from_desc(
                [1, 0, -(scale * scale)]
            ) ** cycles
        actions.append(_action(i, poly, mat, check_matrix=False))
        hodge.append(tuple(b if jj == j else 0 for jj in range(i + 1)))
    return VarietyModel(
        kind="grassmannian",
        dimension=d,
        q=q,
        actions=tuple(actions),
        hodge=tuple(hodge),
        metadata={"k": k, "n": n, "variant": variant},
    )


def generic_model(d, q, charpolys=None, matrices=None, hodge=None, strict=True):
    """Model from user-supplied per-degree data.

    Every degree 0..2d needs a polynomial, a matrix, or both; when both are
    given they must agree. With strict=True the degree-0 and degree-2d
    actions must be t - 1 and t - q**d; otherwise deviations are recorded
    as warnings in the metadata."""
    if d < 0 or q <= 1:
        raise ValidityError("need d >= 0 and q > 1")
    charpolys = dict(charpolys or {})
    matrices = dict(matrices or {})
    warnings = []
    actions = []
    for i in range(2 * d + 1):
        poly = charpolys.get(i)
        mat = matrices.get(i)
        if mat is not None and not isinstance(mat, ExactMatrix):
            mat = ExactMatrix(mat)
        if poly is None and mat is None:
            raise ValidityError(f"degree {i} has neither polynomial nor matrix")
        if poly is None:
            poly = charpoly(mat.rows)
        actions.append(_action(i, poly, mat, check_matrix=True))
    for i, expected in ((0, Poly.from_desc([1, -1])), (2 * d, Poly.from_desc([1, -(q**d)]))):
        if actions[i].charpoly != expected:
            message = (
                f"degree {i} action is {actions[i].charpoly}, expected {expected}"
            )
            if strict:
                raise ValidityError(message)
            warnings.append(message)
    if hodge is None:
        hodge_tuple = tuple(
            tuple(None for _ in range(i + 1)) for i in range(2 * d + 1)
        )
    else:
        hodge_tuple = tuple(tuple(h) for h in hodge)
    return VarietyModel(
        kind="generic",
        dimension=d,
        q=q,
        actions=tuple(actions),
        hodge=hodge_tuple,
        metadata={"warnings": warnings, "strict": strict},
    )


def has_hodge_data(model, i):
    return all(x is not None for x in model.hodge[i])
