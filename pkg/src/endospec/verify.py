"""Verification orchestration: run every check on a model across a list of
primes and collect a deterministic structured report.

Check ids, in report order per degree: functional_equation, cross_duality,
jordan_symmetry, weil_weight, epsilon_congruence, even_multiplicity; per
prime and degree: newton_slope_zero, newton_symmetry, newton_over_hodge;
once per model: zeta_functional_equation. The newton_over_hodge verdict is
advisory evidence and never fails a run.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from endospec.errors import (
    DomainError,
    EndospecError,
    InapplicableModelError,
    NumericError,
    ValidityError,
)
from endospec.exactnum import NormalizedValuation, is_prime
from endospec.matrixops import jordan_symmetry_check
from endospec.poly import (
    coeff_strings,
    cross_duality_check,
    functional_equation_check,
    half_weight_multiplicity,
    squarefree_part,
)
from endospec.polygons import (
    hodge_polygon,
    newton_polygon,
    np_ge_hp,
    slope_zero_check,
    symmetry_check,
    vertices_json,
)
from endospec.varieties import has_hodge_data
from endospec.zeta import zeta_functional_equation, zeta_to_json, zeta_function

ADVISORY_CHECKS = frozenset({"newton_over_hodge"})


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str  # pass | fail | not-applicable | incomparable
    degree: Optional[int] = None
    prime: Optional[int] = None
    witness: tuple = ()

    @property
    def failed(self):
        return self.status == "fail" and self.check_id not in ADVISORY_CHECKS

    def to_json(self):
        out = {"check": self.check_id, "status": self.status}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.prime is not None:
            out["prime"] = str(self.prime)
        if self.witness:
            out["witness"] = dict(self.witness)
        return out


@dataclass(frozen=True)
class WeilWeightResult:
    passed: bool
    failing_root: Optional[str] = None
    deviation: Optional[str] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.passed


def weil_weight_check(P, q, i, precision_digits=60):
    """Numeric weight check plus the exact necessary condition.

    All complex roots of the squarefree part are found at high working
    precision and each must satisfy ||lambda|^2 - q^i| / q^i below the
    tolerance 10**(-precision/3); on top of that the coefficientwise
    functional equation must hold. Multiple roots are collapsed before
    root-finding, which keeps the solver well conditioned."""
    if precision_digits < 30:
        raise DomainError("precision below 30 digits is not meaningful here")
    if not P.is_monic():
        raise ValidityError("weight check needs a monic polynomial")
    if P.degree >= 1 and P.coeff(0) == 0:
        raise ValidityError("zero constant term: 0 is never a Weil number")
    if P.degree == 0:
        return WeilWeightResult(True)
    reduced = squarefree_part(P)
    coeffs = []
    maxbits = 0
    for c in reduced.coeffs_desc():
        f = Fraction(c)
        coeffs.append(f)
        maxbits = max(maxbits, f.numerator.bit_length(), f.denominator.bit_length())
    digits = max(precision_digits + 15, maxbits // 3 + 25)
    target = q**i
    tol = mpmath.mpf(10) ** (-Fraction(precision_digits, 3))
    with mpmath.workdps(digits):
        mp_coeffs = [mpmath.mpf(f.numerator) / f.denominator for f in coeffs]
        try:
            roots, err = mpmath.polyroots(mp_coeffs, maxsteps=200, error=True)
        except mpmath.libmp.NoConvergence as exc:
            raise NumericError(
                f"root finder failed at {digits} digits on degree {reduced.degree}"
            ) from exc
        worst = None
        for r in roots:
            deviation = abs(abs(r) ** 2 - target) / target
            if worst is None or deviation > worst[1]:
                worst = (r, deviation)
        if worst is not None and worst[1] >= tol:
            return WeilWeightResult(
                False,
                failing_root=mpmath.nstr(worst[0], 20),
                deviation=mpmath.nstr(worst[1], 8),
                reason="root modulus off the half-weight circle",
            )
    try:
        fe = functional_equation_check(P, q, i)
    except EndospecError as exc:
        return WeilWeightResult(
            False, reason=f"functional equation inapplicable: {exc}"
        )
    if not fe.holds:
        return WeilWeightResult(
            False,
            reason=f"functional equation fails at coefficient {fe.failure_index}",
        )
    return WeilWeightResult(True)


@dataclass(frozen=True)
class EpsilonCongruence:
    holds: bool
    epsilon: int
    betti: int
    mu_minus: int

    def __bool__(self):
        return self.holds


def epsilon_congruence_check(P, q, i):
    """Check epsilon = betti + mu(-q^{i/2}) mod 2, and epsilon = 0 for odd i."""
    fe = functional_equation_check(P, q, i)
    if not fe.holds:
        raise ValidityError("congruence needs a passing functional equation")
    mu_minus = half_weight_multiplicity(P, q, i, -1)
    b = P.degree
    holds = (fe.epsilon - b - mu_minus) % 2 == 0
    if i % 2 == 1:
        holds = holds and fe.epsilon == 0
    return EpsilonCongruence(
        holds=holds, epsilon=fe.epsilon, betti=b, mu_minus=mu_minus
    )


@dataclass
class VerificationReport:
    model_summary: dict
    results: list
    degree_table: list
    zeta: dict

    @property
    def has_failures(self):
        return any(r.failed for r in self.results)

    def to_json(self):
        return {
            "model": self.model_summary,
            "checks": [r.to_json() for r in self.results],
            "degrees": self.degree_table,
            "zeta": self.zeta,
        }


def _na(check_id, degree=None, prime=None, reason=None):
    witness = (("reason", reason),) if reason else ()
    return CheckResult(
        check_id=check_id,
        status="not-applicable",
        degree=degree,
        prime=prime,
        witness=witness,
    )


def _outcome(check_id, ok, degree=None, prime=None, witness=()):
    return CheckResult(
        check_id=check_id,
        status="pass" if ok else "fail",
        degree=degree,
        prime=prime,
        witness=tuple(witness),
    )


def _guarded(check_id, degree, prime, fn):
    """Run one check; mathematical refusals become not-applicable, other
    domain errors become failures with the message as witness."""
    try:
        return fn()
    except InapplicableModelError as exc:
        return _na(check_id, degree, prime, reason=str(exc))
    except EndospecError as exc:
        return _outcome(
            check_id, False, degree, prime, witness=(("error", str(exc)),)
        )


def full_report(model, primes, precision=60):
    primes = list(primes)
    if not primes:
        raise ValidityError("at least one prime is required")
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
    if precision < 30:
        raise DomainError("precision below 30 digits is not meaningful here")
    q = model.q
    d = model.dimension
    results = []
    degree_rows = []
    fe_results = {}

    for i in range(2 * d + 1):
        act = model.action(i)
        P = act.charpoly
        b = act.betti
        row = {"degree": i, "betti": b}
        if b == 0:
            for cid in (
                "functional_equation",
                "cross_duality",
                "jordan_symmetry",
                "weil_weight",
                "epsilon_congruence",
                "even_multiplicity",
            ):
                results.append(_na(cid, i, reason="no cohomology in this degree"))
            degree_rows.append(row)
            continue
        row["charpoly"] = coeff_strings(P)

        def fe_check(i=i, P=P):
            fe = functional_equation_check(P, q, i)
            fe_results[i] = fe
            witness = []
            if fe.holds:
                witness.append(("epsilon", fe.epsilon))
            else:
                witness.append(("failure_index", fe.failure_index))
            return _outcome("functional_equation", fe.holds, i, witness=witness)

        results.append(_guarded("functional_equation", i, None, fe_check))
        fe = fe_results.get(i)
        if fe is not None and fe.holds:
            row["epsilon"] = fe.epsilon

        def cd_check(i=i, P=P):
            partner = model.charpoly(2 * d - i)
            cd = cross_duality_check(P, partner, q, d, i)
            witness = []
            if cd.holds:
                witness.append(("epsilon", cd.epsilon))
            else:
                witness.append(("failure_index", cd.failure_index))
            return _outcome("cross_duality", cd.holds, i, witness=witness)

        results.append(_guarded("cross_duality", i, None, cd_check))

        if act.matrix is None:
            results.append(_na("jordan_symmetry", i, reason="no matrix supplied"))
        else:

            def js_check(i=i, act=act):
                ok = jordan_symmetry_check(act.matrix, q, i)
                return _outcome("jordan_symmetry", ok, i)

            results.append(_guarded("jordan_symmetry", i, None, js_check))

        def ww_check(i=i, P=P):
            res = weil_weight_check(P, q, i, precision)
            witness = []
            if not res.passed:
                if res.failing_root:
                    witness.append(("root", res.failing_root))
                    witness.append(("deviation", res.deviation))
                if res.reason:
                    witness.append(("reason", res.reason))
            return _outcome("weil_weight", res.passed, i, witness=witness)

        results.append(_guarded("weil_weight", i, None, ww_check))

        def eps_check(i=i, P=P):
            res = epsilon_congruence_check(P, q, i)
            return _outcome(
                "epsilon_congruence",
                res.holds,
                i,
                witness=(
                    ("epsilon", res.epsilon),
                    ("betti", res.betti),
                    ("mu_minus", res.mu_minus),
                ),
            )

        if fe is not None and fe.holds:
            results.append(_guarded("epsilon_congruence", i, None, eps_check))
        else:
            results.append(
                _na("epsilon_congruence", i, reason="functional equation did not pass")
            )

        mu_plus = half_weight_multiplicity(P, q, i, 1)
        mu_minus = half_weight_multiplicity(P, q, i, -1)
        row["mu_plus"] = mu_plus
        row["mu_minus"] = mu_minus

        if i % 2 == 1:

            def even_check(i=i, mp=mu_plus, mm=mu_minus):
                ok = mp % 2 == 0 and mm % 2 == 0
                return _outcome(
                    "even_multiplicity",
                    ok,
                    i,
                    witness=(("mu_plus", mp), ("mu_minus", mm)),
                )

            results.append(_guarded("even_multiplicity", i, None, even_check))
        else:
            results.append(_na("even_multiplicity", i, reason="even degree"))

        degree_rows.append(row)

    for prime in primes:
        v = NormalizedValuation(prime, q)
        divides = v.normalized
        for i in range(2 * d + 1):
            act = model.action(i)
            if act.betti == 0:
                for cid in ("newton_slope_zero", "newton_symmetry", "newton_over_hodge"):
                    results.append(
                        _na(cid, i, prime, reason="no cohomology in this degree")
                    )
                continue
            NP = newton_polygon(act.charpoly, v)
            row = degree_rows[i]
            row.setdefault("newton_polygons", {})[str(prime)] = vertices_json(NP)
            if not divides:

                def sz_check(NP=NP, i=i, prime=prime):
                    return _outcome(
                        "newton_slope_zero",
                        slope_zero_check(NP),
                        i,
                        prime,
                        witness=(("vertices", tuple(map(tuple, vertices_json(NP)))),),
                    )

                results.append(_guarded("newton_slope_zero", i, prime, sz_check))
                results.append(
                    _na("newton_symmetry", i, prime, reason="prime does not divide q")
                )
                results.append(
                    _na("newton_over_hodge", i, prime, reason="prime does not divide q")
                )
                continue
            results.append(
                _na("newton_slope_zero", i, prime, reason="prime divides q")
            )

            def sym_check(NP=NP, i=i, prime=prime):
                return _outcome("newton_symmetry", symmetry_check(NP, i), i, prime)

            results.append(_guarded("newton_symmetry", i, prime, sym_check))

            if not has_hodge_data(model, i):
                results.append(
                    _na("newton_over_hodge", i, prime, reason="no Hodge data")
                )
                continue

            def nh_check(NP=NP, i=i, prime=prime):
                HP = hodge_polygon(i, model.hodge[i])
                cmp_ = np_ge_hp(NP, HP)
                row = degree_rows[i]
                row.setdefault("hodge_polygon", vertices_json(HP))
                if cmp_.status == "incomparable":
                    return CheckResult(
                        check_id="newton_over_hodge",
                        status="incomparable",
                        degree=i,
                        prime=prime,
                    )
                witness = [("endpoint_equal", cmp_.endpoint_equal)]
                if cmp_.status == "holds":
                    witness.append(("identical", cmp_.identical))
                else:
                    witness.append(("failure_x", cmp_.failure_x))
                return _outcome(
                    "newton_over_hodge", bool(cmp_), i, prime, witness=witness
                )

            results.append(_guarded("newton_over_hodge", i, prime, nh_check))

    def zeta_check():
        zres = zeta_functional_equation(model)
        return _outcome(
            "zeta_functional_equation",
            zres.holds,
            witness=(
                ("sign", zres.sign),
                ("expected_sign", zres.expected_sign),
                ("mu", zres.mu),
                ("chi", zres.chi),
            ),
        )

    results.append(_guarded("zeta_functional_equation", None, None, zeta_check))

    summary = {
        "kind": model.kind,
        "dimension": d,
        "q": str(q),
        "betti": model.betti_numbers,
        "primes": [str(p) for p in primes],
        "precision": precision,
    }
    if model.kind == "grassmannian":
        summary["k"] = model.metadata["k"]
        summary["n"] = model.metadata["n"]
        summary["variant"] = model.metadata["variant"]
    if model.kind == "abelian":
        summary["polarization_verified"] = bool(
            model.metadata.get("polarization_verified")
        )
    return VerificationReport(
        model_summary=summary,
        results=results,
        degree_table=degree_rows,
        zeta=zeta_to_json(zeta_function(model)),
    )
