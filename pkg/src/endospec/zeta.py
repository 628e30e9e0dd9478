"""Lefschetz numbers of iterates, the dynamical zeta function as an exact
rational function, and its functional equation.

The zeta function is held as a numerator/denominator pair of reversed
characteristic polynomials (odd degrees up, even degrees down); series
expansion happens only inside the log-derivative consistency check.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from endospec.errors import DomainError, InapplicableModelError, ValidityError
from endospec.exactnum import QuadExt, half_power
from endospec.poly import (
    Poly,
    functional_equation_check,
    half_weight_multiplicity,
    power_sums,
)


@dataclass(frozen=True)
class ZetaFunction:
    numerator: Poly
    denominator: Poly
    chi: int
    q: int
    dimension: int


def zeta_function(model):
    """Alternating product of det(1 - t f*|H^i): odd degrees in the
    numerator, even in the denominator; both have constant term 1."""
    num = Poly([1])
    den = Poly([1])
    for i, act in enumerate(model.actions):
        if act.betti == 0:
            continue
        rev = act.charpoly.reversed_poly()
        if i % 2:
            num = num * rev
        else:
            den = den * rev
    return ZetaFunction(
        numerator=num,
        denominator=den,
        chi=model.euler_characteristic,
        q=model.q,
        dimension=model.dimension,
    )


def lefschetz_number(model, n):
    """Alternating sum of n-th power sums across all degrees."""
    if n < 1:
        raise DomainError("iterate count must be positive")
    total = 0
    for i, act in enumerate(model.actions):
        if act.betti == 0:
            continue
        total += (-1) ** i * power_sums(act.charpoly, n)[-1]
    return total


def lefschetz_number_by_trace(model, n):
    """Same number from matrix traces; an independent code path."""
    if n < 1:
        raise DomainError("iterate count must be positive")
    total = 0
    for i, act in enumerate(model.actions):
        if act.betti == 0:
            continue
        if act.matrix is None:
            raise ValidityError(f"degree {i} carries no matrix")
        total += (-1) ** i * act.matrix.power(n).trace()
    return total


def _log_derivative_series(F, order):
    """Coefficients l_1..l_order of t*F'/F for F with constant term 1.

    No divisions occur: l_n = n*f_n - sum l_k f_{n-k}, so integer input
    stays integer."""
    f = [F.coeff(k) for k in range(order + 1)]
    if f[0] != 1:
        raise ValidityError("series inversion needs constant term 1")
    l = [0] * (order + 1)
    for n in range(1, order + 1):
        acc = n * f[n]
        for k in range(1, n):
            acc -= l[k] * f[n - k]
        l[n] = acc
    return l[1:]


def zeta_series_consistency(model, order):
    """Check t*Z'/Z = sum N_n t**n through the requested order."""
    if order < 1:
        raise DomainError("order must be positive")
    zf = zeta_function(model)
    ln = _log_derivative_series(zf.numerator, order)
    ld = _log_derivative_series(zf.denominator, order)
    for n in range(1, order + 1):
        if ln[n - 1] - ld[n - 1] != lefschetz_number(model, n):
            return False
    return True


@dataclass(frozen=True)
class ZetaFunctionalEquation:
    holds: bool
    sign: Optional[int]
    expected_sign: int
    mu: int
    chi: int

    def __bool__(self):
        return self.holds


def _star(F, q, d):
    """t**deg(F) * F(1/(q**d * t)) as a polynomial with rational coefficients."""
    deg = F.degree
    asc = F.coeffs_asc()
    s = Fraction(1, q**d)
    return Poly([asc[deg - j] * s ** (deg - j) for j in range(deg + 1)])


def zeta_functional_equation(model):
    """Verify Z(1/(q**d t)) = (-1)**(chi+mu) q**(d chi/2) t**chi Z(t).

    Cross-multiplied, the identity is the polynomial equation
    G_N * D = sign * q**(d chi/2) * G_D * N over Q(sqrt(q)), where G is the
    reversal-with-scaling transform; mu is the multiplicity of -q**(d/2) in
    the middle degree."""
    q = model.q
    d = model.dimension
    for act in model.actions:
        if act.betti == 0:
            continue
        fe = functional_equation_check(act.charpoly, q, act.degree)
        if not fe.holds:
            raise InapplicableModelError(
                f"degree {act.degree} fails its own functional equation"
            )
    zf = zeta_function(model)
    chi = zf.chi
    GN = _star(zf.numerator, q, d)
    GD = _star(zf.denominator, q, d)
    lhs = GN * zf.denominator
    rhs = GD * zf.numerator
    e = d * chi
    as_quad = lambda p: p.map_coeffs(lambda c: QuadExt.rational(Fraction(c), q))
    if e >= 0:
        lhs_s = as_quad(lhs)
        rhs_s = rhs.scale(half_power(q, 1, e))
    else:
        lhs_s = lhs.scale(half_power(q, 1, -e))
        rhs_s = as_quad(rhs)
    if lhs_s == rhs_s:
        sign = 1
    elif lhs_s == -rhs_s:
        sign = -1
    else:
        sign = None
    if model.betti(d) > 0:
        mu = half_weight_multiplicity(model.charpoly(d), q, d, -1)
    else:
        mu = 0
    expected = -1 if (chi + mu) % 2 else 1
    return ZetaFunctionalEquation(
        holds=sign == expected,
        sign=sign,
        expected_sign=expected,
        mu=mu,
        chi=chi,
    )


def zeta_to_json(zf):
    """Serializable form with coefficient strings, leading-first."""
    return {
        "numerator": [str(c) for c in zf.numerator.coeffs_desc()],
        "denominator": [str(c) for c in zf.denominator.coeffs_desc()],
        "chi": zf.chi,
    }
