"""Schur convexity analysis over complex vectors.

Contains the four-case derivative criterion on box domains, a randomized
majorization-based falsifier, the two composition tables for building new
Schur-convex functions, the averaging condition those tables require, and a
certification routine for single-variable maps preserving weak majorization.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import GradientUnavailable, NotWeaklyMajorized
from .majorization import Majorization, TTransform, majorize_check, t_transform_apply
from .scalar import (
    EXACT,
    OrderOutcome,
    TotalComplex,
    approx,
    cmp_total,
    exact,
    from_complex,
    sort_desc,
)

DEFAULT_SEED = 987143
_SIGN_TOL = 1e-12


class Prop(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    SCHUR_CONVEX = "schur_convex"
    SCHUR_CONCAVE = "schur_concave"
    CONVEX_AFFINE = "convex_affine"
    CONCAVE_AFFINE = "concave_affine"


@dataclass(frozen=True)
class DomainBox:
    """Box constraints on entry differences: for entries within the box,
    0 <= Re(eps) <= c1 and c2 <= Im(eps) <= c3 for the perturbations used in
    the derivative criterion."""

    c1: float
    c2: float
    c3: float


@dataclass(frozen=True)
class SymmetricFunction:
    """Symmetric scalar function of n complex variables.

    ``gradient(x, i)`` should return the complex partial derivative; when
    omitted it falls back to central finite differences with a real step.
    """

    arity: int
    value: Callable[[Sequence[complex]], complex]
    gradient: Optional[Callable[[Sequence[complex], int], complex]] = None
    fd_step: float = 1e-6
    name: str = ""

    def partial(self, x: Sequence[complex], i: int) -> complex:
        if self.gradient is not None:
            return self.gradient(x, i)
        h = self.fd_step * max(1.0, abs(x[i]))
        up = list(x)
        dn = list(x)
        up[i] += h
        dn[i] -= h
        return (self.value(up) - self.value(dn)) / (2 * h)


def sum_of_squares(n: int) -> SymmetricFunction:
    return SymmetricFunction(
        n, lambda x: sum(z * z for z in x), lambda x, i: 2 * x[i], name="sum_sq"
    )


def negative_sum_of_squares(n: int) -> SymmetricFunction:
    return SymmetricFunction(
        n, lambda x: -sum(z * z for z in x), lambda x, i: -2 * x[i], name="neg_sum_sq"
    )


@dataclass(frozen=True)
class OstrowskiRecord:
    sample: int
    i: int
    j: int
    d_re: float
    d_im: float
    case: int
    ok: bool


@dataclass
class OstrowskiReport:
    records: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.ok]


def _sign(v: float) -> int:
    if v > _SIGN_TOL:
        return 1
    if v < -_SIGN_TOL:
        return -1
    return 0


def schur_ostrowski_check(
    f: SymmetricFunction, box: DomainBox, samples: Sequence[Sequence[complex]]
) -> OstrowskiReport:
    """Four-case derivative criterion at each sample point.

    For every ordered pair (i, j) with x_i >= x_j in the total order, the
    signs of DR = Re(df/dx_i - df/dx_j) and DI = Im(df/dx_i - df/dx_j)
    select a case whose inequality involves the box bounds c1, c2, c3.
    """
    report = OstrowskiReport()
    for s_idx, x in enumerate(samples):
        if len(x) != f.arity:
            raise GradientUnavailable(f"sample arity {len(x)} vs declared {f.arity}")
        zs = [from_complex(complex(z)) for z in x]
        for i in range(len(x)):
            for j in range(len(x)):
                if i == j:
                    continue
                if cmp_total(zs[i], zs[j]) is OrderOutcome.LESS:
                    continue
                diff = f.partial(list(map(complex, x)), i) - f.partial(list(map(complex, x)), j)
                d_re, d_im = diff.real, diff.imag
                if _sign(d_re) >= 0 and _sign(d_im) >= 0:
                    case, ok = 1, box.c3 * d_im <= _SIGN_TOL
                elif _sign(d_re) >= 0:
                    case, ok = 2, box.c2 * d_im <= _SIGN_TOL
                elif _sign(d_im) >= 0:
                    case, ok = 3, box.c1 * d_re >= box.c3 * d_im - _SIGN_TOL
                else:
                    case, ok = 4, box.c1 * d_re >= box.c2 * d_im - _SIGN_TOL
                report.records.append(OstrowskiRecord(s_idx, i, j, d_re, d_im, case, ok))
    return report


@dataclass(frozen=True)
class Counterexample:
    x: tuple
    y: tuple
    f_x: complex
    f_y: complex
    trial: int


def _random_majorized_pair(rng: random.Random, n: int, complex_entries: bool):
    """Exact y and x with x strictly majorized by y, built by applying a few
    convex mixing steps to y."""
    def draw():
        re = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        im = Fraction(rng.randint(-40, 40), rng.randint(1, 8)) if complex_entries else 0
        return exact(re, im)

    y = tuple(draw() for _ in range(n))
    x = list(y)
    for _ in range(rng.randint(1, n)):
        if n < 2:
            break
        i, j = sorted(rng.sample(range(n), 2))
        beta = exact(Fraction(rng.randint(0, 16), 16))
        x = list(t_transform_apply(x, TTransform(i, j, beta)))
    return tuple(x), y


def schur_convex_falsify(
    f: SymmetricFunction,
    n: int,
    trials: int = 10_000,
    seed: int = DEFAULT_SEED,
    complex_entries: bool = False,
) -> Optional[Counterexample]:
    """Search for x strictly majorized by y with f(x) > f(y) in the total
    order.  Returns None when no counterexample to Schur convexity is found."""
    rng = random.Random(seed)
    for trial in range(trials):
        x, y = _random_majorized_pair(rng, n, complex_entries)
        if majorize_check(x, y) is not Majorization.STRICT:
            continue
        fx = complex(f.value([z.to_complex() for z in x]))
        fy = complex(f.value([z.to_complex() for z in y]))
        if cmp_total(from_complex(fx), from_complex(fy)) is OrderOutcome.GREATER:
            return Counterexample(x, y, fx, fy, trial)
    return None


# -- composition tables ---------------------------------------------------

_INC = frozenset({Prop.INCREASING})
_DEC = frozenset({Prop.DECREASING})


def _row(g_req, h_req, result):
    return (frozenset(g_req), frozenset(h_req), frozenset(result))


# Outer g composed with a Schur-convex/concave inner h: g(h(x)).  Rows are
# checked most-specific first; the two rows sharing hypotheses (decreasing g
# with decreasing Schur-convex h) are kept in published order, so the first
# one decides.
_TABLE1 = [
    _row({Prop.INCREASING}, {Prop.INCREASING, Prop.SCHUR_CONVEX},
         {Prop.INCREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.INCREASING}, {Prop.INCREASING, Prop.SCHUR_CONCAVE},
         {Prop.INCREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.INCREASING}, {Prop.DECREASING, Prop.SCHUR_CONVEX},
         {Prop.DECREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING}, {Prop.DECREASING, Prop.SCHUR_CONVEX},
         {Prop.DECREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.DECREASING}, {Prop.DECREASING, Prop.SCHUR_CONCAVE},
         {Prop.DECREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING}, {Prop.INCREASING, Prop.SCHUR_CONCAVE},
         {Prop.DECREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.INCREASING}, {Prop.SCHUR_CONVEX}, {Prop.SCHUR_CONVEX}),
    _row({Prop.INCREASING}, {Prop.SCHUR_CONCAVE}, {Prop.SCHUR_CONCAVE}),
    _row({Prop.DECREASING}, {Prop.SCHUR_CONVEX}, {Prop.SCHUR_CONCAVE}),
    _row({Prop.DECREASING}, {Prop.SCHUR_CONCAVE}, {Prop.SCHUR_CONVEX}),
]

# Schur-convex/concave outer g applied entrywise through h: g(h(x_1), ...,
# h(x_n)).  Only valid once the averaging condition on h has been verified.
_TABLE2 = [
    _row({Prop.INCREASING, Prop.SCHUR_CONVEX}, {Prop.INCREASING, Prop.CONVEX_AFFINE},
         {Prop.INCREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING, Prop.SCHUR_CONVEX}, {Prop.DECREASING, Prop.CONCAVE_AFFINE},
         {Prop.INCREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.INCREASING, Prop.SCHUR_CONVEX}, {Prop.DECREASING, Prop.CONVEX_AFFINE},
         {Prop.DECREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING, Prop.SCHUR_CONVEX}, {Prop.INCREASING, Prop.CONCAVE_AFFINE},
         {Prop.DECREASING, Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING, Prop.SCHUR_CONCAVE}, {Prop.INCREASING, Prop.CONVEX_AFFINE},
         {Prop.DECREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.INCREASING, Prop.SCHUR_CONCAVE}, {Prop.DECREASING, Prop.CONCAVE_AFFINE},
         {Prop.DECREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.DECREASING, Prop.SCHUR_CONCAVE}, {Prop.DECREASING, Prop.CONVEX_AFFINE},
         {Prop.INCREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.INCREASING, Prop.SCHUR_CONCAVE}, {Prop.INCREASING, Prop.CONCAVE_AFFINE},
         {Prop.INCREASING, Prop.SCHUR_CONCAVE}),
    _row({Prop.INCREASING, Prop.SCHUR_CONVEX}, {Prop.CONVEX_AFFINE}, {Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING, Prop.SCHUR_CONVEX}, {Prop.CONCAVE_AFFINE}, {Prop.SCHUR_CONVEX}),
    _row({Prop.DECREASING, Prop.SCHUR_CONCAVE}, {Prop.CONVEX_AFFINE}, {Prop.SCHUR_CONCAVE}),
    _row({Prop.INCREASING, Prop.SCHUR_CONCAVE}, {Prop.CONCAVE_AFFINE}, {Prop.SCHUR_CONCAVE}),
]


def _lookup(table, g_props, h_props):
    g_props = frozenset(g_props)
    h_props = frozenset(h_props)
    for g_req, h_req, result in table:
        if g_req <= g_props and h_req <= h_props:
            return result
    return None


def compose_table1(g_props, h_props):
    """Derived properties of g(h(x)), or None when no row applies."""
    return _lookup(_TABLE1, g_props, h_props)


def compose_table2(g_props, h_props, cdm_verified: bool):
    """Derived properties of g(h(x_1), ..., h(x_n)); requires the averaging
    condition on h to have been verified."""
    if not cdm_verified:
        return None
    return _lookup(_TABLE2, g_props, h_props)


def cdm_condition_check(
    h: Callable[[TotalComplex], TotalComplex],
    y1: TotalComplex,
    y2: TotalComplex,
    alpha,
) -> bool:
    """Averaging condition on h: the alpha-mix of (h(y1), h(y2)) with its
    swap must be strictly majorized by (h(y1), h(y2))."""
    h1, h2 = h(y1), h(y2)
    if isinstance(alpha, TotalComplex):
        a = alpha
    elif h1.backend == EXACT:
        a = exact(Fraction(alpha))
    else:
        a = approx(float(alpha))
    one = exact(1) if a.backend == EXACT else approx(1.0, 0.0, a.eps)
    comp = one - a
    mixed = (a * h1 + comp * h2, a * h2 + comp * h1)
    return majorize_check(mixed, (h1, h2)) is Majorization.STRICT


# -- single-variable maps preserving weak majorization ---------------------


class MajorizationCert(enum.Enum):
    CERTIFIED_INCREASING = "certified_increasing"
    CERTIFIED_DECREASING = "certified_decreasing"
    CERTIFIED_ENTRYWISE = "certified_entrywise"
    NOT_CERTIFIED = "not_certified"


@dataclass(frozen=True)
class MajorizationPreserveResult:
    kind: MajorizationCert
    reversed_direction: bool = False  # conclusion runs f(y) weakly below f(x)


def _pointwise_monotonicity(f, points):
    """Classify f on the given points: strictly increasing, strictly
    decreasing, or neither, by comparing f across every ordered pair."""
    inc = dec = True
    pts = sort_desc(points)
    for a_idx in range(len(pts)):
        for b_idx in range(a_idx + 1, len(pts)):
            a, b = pts[a_idx], pts[b_idx]  # a >= b
            if cmp_total(a, b) is OrderOutcome.EQUAL:
                continue
            c = cmp_total(f(a), f(b))
            if c is not OrderOutcome.GREATER:
                inc = False
            if c is not OrderOutcome.LESS:
                dec = False
    return inc, dec


def majorization_preserving_check(f, x, y) -> MajorizationPreserveResult:
    """Certify that the entrywise map z -> f(z) carries the weak majorization
    x below y into f(x) weakly below f(y).

    Checked, in order: the increasing-map certificate (strict monotonicity on
    the relevant points plus the difference-sum conditions), the decreasing
    one (tail conditions), then the entrywise special case x_i <= y_i which
    drops the difference-sum conditions (a decreasing f then reverses the
    conclusion).
    """
    verdict = majorize_check(x, y)
    if verdict is Majorization.NONE:
        raise NotWeaklyMajorized("x must be weakly majorized by y")
    sx, sy = sort_desc(x), sort_desc(y)
    inc, dec = _pointwise_monotonicity(f, list(sx) + list(sy))
    fx = [f(v) for v in sx]
    fy = [f(v) for v in sy]
    n = len(sx)

    if inc:
        ok = True
        for i in range(1, n):
            lhs = fx[i] - fy[i]
            rhs = None
            for j in range(i):
                d = fy[j] - fx[j]
                rhs = d if rhs is None else rhs + d
            if cmp_total(lhs, rhs) is OrderOutcome.GREATER:
                ok = False
                break
        if ok:
            return MajorizationPreserveResult(MajorizationCert.CERTIFIED_INCREASING)
    if dec:
        ok = cmp_total(fx[n - 1], fy[n - 1]) is not OrderOutcome.GREATER
        if ok:
            for i in range(n - 1):
                lhs = fx[i] - fy[i]
                rhs = None
                for j in range(i + 1, n):
                    d = fy[j] - fx[j]
                    rhs = d if rhs is None else rhs + d
                if cmp_total(lhs, rhs) is OrderOutcome.GREATER:
                    ok = False
                    break
        if ok:
            return MajorizationPreserveResult(MajorizationCert.CERTIFIED_DECREASING)
    entrywise = all(
        cmp_total(a, b) is not OrderOutcome.GREATER for a, b in zip(sx, sy)
    )
    if entrywise and inc:
        return MajorizationPreserveResult(MajorizationCert.CERTIFIED_ENTRYWISE)
    if entrywise and dec:
        return MajorizationPreserveResult(
            MajorizationCert.CERTIFIED_ENTRYWISE, reversed_direction=True
        )
    return MajorizationPreserveResult(MajorizationCert.NOT_CERTIFIED)
