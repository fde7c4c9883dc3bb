"""Sobolev bilinear forms: a classical weight composed with a lowering operator.

The inner product of two polynomials u, v under a form is

    <u, v>  =  integral  (D u)(x) (D v)(x) w(x) dx

where D is the form's lowering operator and w one of the two normalized
classical densities

* ``laguerre(q)``:  x^(q-1) e^(-x) / Gamma(q)  on (0, inf),  moments (q)_k
* ``jacobi(a, b)``: x^(a-1) (1-x)^(b-1) / B(a, b)  on (0, 1),
  moments (a)_k / (a+b)_k.

Because moments are exact rationals, the inner product of exact polynomials
is an exact rational; the quadrature route recomputes it through a Gauss
rule (float nodes and weights, integrand evaluated exactly at them) and
exists purely as an independent cross-check.

Gauss rules come from the Golub-Welsch construction: eigenvalues of the
Jacobi matrix of the three-term recurrence give the nodes, squared first
eigenvector components give the weights.  The tridiagonal eigenproblem is
solved by implicit-shift QL with Wilkinson shifts, carrying the first-row
components through the rotations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .diffop import DiffOp, composed_lowering
from .exactnum import Poly, as_rational, pochhammer
from .families import BOLD_L, BOLD_P, SCRIPT_L, SCRIPT_P, FamilySpec, make_member

__all__ = [
    "ConvergenceError",
    "WeightSpec",
    "laguerre_weight",
    "jacobi_weight",
    "moment",
    "SobolevForm",
    "sobolev_form_for",
    "sobolev_inner_exact",
    "a_n_normalized",
    "OrthogonalityReport",
    "verify_orthogonality",
    "QuadRule",
    "gauss_rule",
    "sobolev_inner_quadrature",
]

LAGUERRE_WEIGHT = "laguerre"
JACOBI_WEIGHT = "jacobi"


class ConvergenceError(RuntimeError):
    """An iterative numeric procedure failed to settle within its budget."""


@dataclass(frozen=True)
class WeightSpec:
    """One of the two normalized classical weights, with exact parameters."""

    kind: str
    params: tuple[Fraction, ...]

    def __post_init__(self):
        params = tuple(as_rational(p) for p in self.params)
        object.__setattr__(self, "params", params)
        want = {LAGUERRE_WEIGHT: 1, JACOBI_WEIGHT: 2}.get(self.kind)
        if want is None:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if len(params) != want:
            raise ValueError(f"{self.kind} weight takes {want} parameter(s)")
        if any(p <= 0 for p in params):
            raise ValueError(f"{self.kind} weight parameters must be strictly positive")


def laguerre_weight(q) -> WeightSpec:
    return WeightSpec(LAGUERRE_WEIGHT, (as_rational(q),))


def jacobi_weight(a, b) -> WeightSpec:
    return WeightSpec(JACOBI_WEIGHT, (as_rational(a), as_rational(b)))


@lru_cache(maxsize=None)
def moment(weight: WeightSpec, k: int) -> Fraction:
    """k-th raw moment of the normalized weight, exactly."""
    if k < 0:
        raise ValueError("moment order must be nonnegative")
    if weight.kind == LAGUERRE_WEIGHT:
        (q,) = weight.params
        return Fraction(pochhammer(q, k))
    a, b = weight.params
    return Fraction(pochhammer(a, k)) / pochhammer(a + b, k)


@dataclass(frozen=True)
class SobolevForm:
    weight: WeightSpec
    dop: DiffOp


def sobolev_form_for(spec: FamilySpec) -> SobolevForm:
    """The form under which the family is orthogonal.

    Requires the r (Laguerre side) or c (Jacobi side) parameters to be
    positive integers, since they set lowering-operator orders.
    """
    if spec.kind in (SCRIPT_L, BOLD_L):
        q, *rs = spec.params
        return SobolevForm(laguerre_weight(q), composed_lowering(_as_orders(rs)))
    if spec.kind in (SCRIPT_P, BOLD_P):
        a, b, *cs = spec.params
        return SobolevForm(jacobi_weight(a, b), composed_lowering(_as_orders(cs)))
    raise ValueError(f"no Sobolev form for family kind {spec.kind!r}")


def _as_orders(values: Sequence[Fraction]) -> list[int]:
    out = []
    for v in values:
        if v.denominator != 1 or v < 1:
            raise ValueError(f"lowering-operator index must be a positive integer, got {v}")
        out.append(int(v))
    return out


def sobolev_inner_exact(form: SobolevForm, yn: Poly, ym: Poly) -> Fraction:
    """<yn, ym> as an exact rational.

    The double sum over coefficient pairs collapses to a dot product of the
    coefficient convolution (a polynomial product) with the moment sequence.
    """
    product = form.dop(yn) * form.dop(ym)
    return sum(
        (c * moment(form.weight, k) for k, c in enumerate(product.coeffs)),
        Fraction(0),
    )


def a_n_normalized(spec: FamilySpec, n: int) -> Fraction:
    """Closed form of the diagonal value <y_n, y_n> under the family's form."""
    if n < 0:
        raise ValueError("member index must be nonnegative")
    if spec.kind in (SCRIPT_L, BOLD_L):
        q, *rs = spec.params
        pref = 1
        for r in _as_orders(rs):
            pref *= factorial(r - 1)
        return Fraction(pref) ** 2 * factorial(n) / pochhammer(q, n)
    if spec.kind in (SCRIPT_P, BOLD_P):
        a, b, *cs = spec.params
        pref = 1
        for c in _as_orders(cs):
            pref *= factorial(c - 1)
        if n == 0:
            return Fraction(pref) ** 2
        return (
            Fraction(pref) ** 2
            * factorial(n)
            * pochhammer(b, n)
            / (pochhammer(a, n) * (2 * n + a + b - 1) * pochhammer(a + b, n - 1))
        )
    raise ValueError(f"no normalized diagonal for family kind {spec.kind!r}")


@dataclass(frozen=True)
class OrthogonalityReport:
    spec: FamilySpec
    nmax: int
    pairs_checked: int
    failures: tuple[tuple[int, int, Fraction, Fraction], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_orthogonality(spec: FamilySpec, nmax: int) -> OrthogonalityReport:
    """Exact check of <y_n, y_m> = delta_{nm} A_n for all 0 <= m <= n <= nmax."""
    form = sobolev_form_for(spec)
    failures = []
    pairs = 0
    for n in range(nmax + 1):
        yn = make_member(spec, n)
        for m in range(n + 1):
            pairs += 1
            got = sobolev_inner_exact(form, yn, make_member(spec, m))
            want = a_n_normalized(spec, n) if n == m else Fraction(0)
            if got != want:
                failures.append((n, m, got, want))
    return OrthogonalityReport(spec, nmax, pairs, tuple(failures))


# --- Gauss rules -----------------------------------------------------------

_QL_MAX_SWEEPS = 50
_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadRule:
    """Nodes and weights of a Gauss rule for a normalized classical weight."""

    weight: WeightSpec
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def npoints(self) -> int:
        return len(self.nodes)


def _recurrence_coefficients(weight: WeightSpec, npoints: int):
    """Monic three-term recurrence coefficients (alpha_k, beta_k), beta_0 unused."""
    if weight.kind == LAGUERRE_WEIGHT:
        q = float(weight.params[0])
        alpha = [2.0 * k + q for k in range(npoints)]
        beta = [0.0] + [k * (k + q - 1.0) for k in range(1, npoints)]
        return alpha, beta
    a, b = (float(p) for p in weight.params)
    s = a + b - 2.0
    alpha = [a / (a + b)]
    beta = [0.0]
    for k in range(1, npoints):
        alpha.append(0.5 * (1.0 + (a - b) * s / ((2 * k + s) * (2 * k + s + 2))))
        if k == 1:
            # The generic formula below is 0/0 at a+b = 1; this value (the
            # variance of the Beta(a, b) distribution) covers every case.
            beta.append(a * b / ((a + b) ** 2 * (a + b + 1)))
        else:
            beta.append(
                k * (k + b - 1) * (k + a - 1) * (k + s)
                / ((2 * k + s) ** 2 * (2 * k + s + 1) * (2 * k + s - 1))
            )
    return alpha, beta


def _ql_implicit(diag, sub):
    """Eigenvalues of a symmetric tridiagonal matrix plus first-row eigenvector
    components, by implicit-shift QL with Wilkinson shifts."""
    n = len(diag)
    d = list(diag)
    e = list(sub) + [0.0]
    z = [0.0] * n
    z[0] = 1.0
    for low in range(n):
        sweeps = 0
        while True:
            m = low
            while m < n - 1 and abs(e[m]) > _EPS * (abs(d[m]) + abs(d[m + 1])):
                m += 1
            if m == low:
                break
            sweeps += 1
            if sweeps > _QL_MAX_SWEEPS:
                raise ConvergenceError(
                    f"tridiagonal eigenvalue {low} did not converge in {_QL_MAX_SWEEPS} sweeps"
                )
            g = (d[low + 1] - d[low]) / (2.0 * e[low])
            r = math.hypot(g, 1.0)
            g = d[m] - d[low] + e[low] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, low - 1, -1):
                f = s * e[i]
                bb = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * bb
                p = s * r
                d[i + 1] = g + p
                g = c * r - bb
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[low] -= p
            e[low] = g
            e[m] = 0.0
    order = sorted(range(n), key=lambda i: d[i])
    return [d[i] for i in order], [z[i] for i in order]


@lru_cache(maxsize=None)
def gauss_rule(weight: WeightSpec, npoints: int) -> QuadRule:
    """Gauss rule with the requested point count, exact for degree 2*npoints - 1."""
    if npoints < 1:
        raise ValueError("a quadrature rule needs at least one point")
    alpha, beta = _recurrence_coefficients(weight, npoints)
    sub = [math.sqrt(b) for b in beta[1:]]
    nodes, firsts = _ql_implicit(alpha, sub)
    weights = [f * f for f in firsts]  # total mass is 1 for normalized weights
    if any(w <= 0.0 for w in weights):
        raise ConvergenceError("quadrature produced a nonpositive weight")
    return QuadRule(weight, tuple(nodes), tuple(weights))


def sobolev_inner_quadrature(
    form: SobolevForm, yn: Poly, ym: Poly, npoints: int | None = None
) -> float:
    """<yn, ym> recomputed through a Gauss rule.

    The rule's nodes and weights are the float ingredient; the lowered
    polynomials are evaluated exactly at ``Fraction(node)`` (the node's
    exact binary value) and the weighted sum is accumulated as a rational
    before the single final rounding.  Lowered members take small values
    near the nodes while their coefficients are large, so float evaluation
    would drown the comparison in cancellation noise; done this way the
    residual against ``sobolev_inner_exact`` measures only the accuracy of
    the computed rule, which with the default (exactness-matching) point
    count is near machine precision.
    """
    u = form.dop(yn)
    v = form.dop(ym)
    if u.is_zero or v.is_zero:
        return 0.0
    if npoints is None:
        npoints = (u.degree + v.degree) // 2 + 1
    rule = gauss_rule(form.weight, npoints)
    total = Fraction(0)
    for x, w in zip(rule.nodes, rule.weights):
        node = Fraction(x)
        total += Fraction(w) * u(node) * v(node)
    return float(total)
