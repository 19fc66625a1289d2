"""Jordan structure of matrix functions.

Evaluating an analytic f on a Jordan block J_n(lambda) gives an upper
triangular Toeplitz matrix whose q-th superdiagonal is f^(q)(lambda)/q!.
The block structure of f(X) then depends only on kappa, the order of the
first nonvanishing derivative at each eigenvalue: every block of size n
splits into kappa nearly-equal pieces (ceil(n/kappa) and floor(n/kappa)).
This module provides the split in closed form, the independent rank-based
oracle for it, the per-eigenvalue refinement, and the representation-level
map f(X) together with the prefix-sum gap vectors it induces.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Sequence, Union

from .errors import (
    DerivativeOrderExceeded,
    IncomparableNilpotent,
    KappaNotFound,
    OutsideAnalyticityRadius,
)
from .linalg import Matrix, block_diag, rank_exact
from .partitions import Partition, as_partition, dominance_check, merge_desc, prefix
from .scalar import EXACT, FLOAT, OrderOutcome, TotalComplex, approx, cmp_total, exact
from .snrepr import SNRepresentation

DERIVATIVE_EPS = 1e-10


@dataclass(frozen=True)
class PolynomialFunction:
    """Polynomial with total-complex coefficients, ascending by degree.

    Derivatives are exact for exact-backend coefficients.
    """

    coefficients: tuple

    @property
    def radius(self) -> float:
        return math.inf

    @property
    def backend(self) -> str:
        return self.coefficients[0].backend if self.coefficients else EXACT

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def derivative_value(self, lam: TotalComplex, order: int = 0) -> TotalComplex:
        """f^(order)(lam), via falling-factorial weights on coefficients."""
        acc = TotalComplex.zero(lam.backend, lam.eps)
        power = None  # lam^(k - order), built incrementally
        for k, c in enumerate(self.coefficients):
            if k < order:
                continue
            if c.backend != lam.backend:
                if lam.backend == FLOAT:
                    c = c.to_float_backend(lam.eps)
                else:
                    raise TypeError("float coefficients cannot evaluate at exact points")
            w = math.perm(k, order)
            power = _one_like(lam) if power is None else power * lam
            term = c * power
            acc = acc + term.scale_rational(w)
        return acc

    def __call__(self, lam: TotalComplex) -> TotalComplex:
        return self.derivative_value(lam, 0)

    def eval_matrix(self, x: Matrix) -> Matrix:
        """f(X) by Horner's rule in matrix arithmetic."""
        n = x.shape[0]
        backend = x.backend
        eps = x.rows[0][0].eps
        result = Matrix.zeros(n, n, backend, eps)
        ident = Matrix.identity(n, backend, eps)
        for c in reversed(self.coefficients):
            c_local = c if c.backend == backend else c.to_float_backend(eps)
            result = result @ x + ident.scale(c_local)
        return result


@dataclass(frozen=True)
class OracleFunction:
    """Float-only function given by a derivative oracle (lam, order) -> complex."""

    name: str
    derivatives: Callable[[complex, int], complex]
    radius: float = math.inf
    max_order: int | None = None

    @property
    def backend(self) -> str:
        return FLOAT

    def derivative_value(self, lam: TotalComplex, order: int = 0) -> TotalComplex:
        if self.max_order is not None and order > self.max_order:
            raise DerivativeOrderExceeded(f"{self.name} supports derivatives up to {self.max_order}")
        z = self.derivatives(lam.to_complex(), order)
        return approx(z.real, z.imag, lam.eps or 1e-9)

    def __call__(self, lam: TotalComplex) -> TotalComplex:
        return self.derivative_value(lam, 0)


FunctionDescriptor = Union[PolynomialFunction, OracleFunction]


def _one_like(lam: TotalComplex) -> TotalComplex:
    if lam.backend == EXACT:
        return exact(1)
    return approx(1.0, 0.0, lam.eps)


def poly(coeffs: Sequence, backend: str = EXACT) -> PolynomialFunction:
    """Convenience constructor from ints/Fractions/complex/TotalComplex."""
    out = []
    for c in coeffs:
        if isinstance(c, TotalComplex):
            out.append(c)
        elif backend == EXACT:
            if isinstance(c, complex):
                raise TypeError("exact polynomials need rational coefficients")
            out.append(exact(Fraction(c)))
        else:
            z = complex(c)
            out.append(approx(z.real, z.imag))
    return PolynomialFunction(tuple(out))


_NAMED_ORACLES = {
    "exp": lambda z, q: cmath.exp(z),
    "sin": lambda z, q: cmath.sin(z + q * math.pi / 2),
    "cos": lambda z, q: cmath.cos(z + q * math.pi / 2),
}


def named_oracle(name: str) -> OracleFunction:
    try:
        fn = _NAMED_ORACLES[name]
    except KeyError:
        raise KeyError(f"unknown function oracle {name!r}; have {sorted(_NAMED_ORACLES)}")
    return OracleFunction(name, fn)


def _check_radius(f: FunctionDescriptor, lam: TotalComplex):
    if abs(lam.to_complex()) >= f.radius:
        raise OutsideAnalyticityRadius(
            f"|lambda| = {abs(lam.to_complex()):.6g} >= radius {f.radius:.6g}"
        )


def f_jordan_block(f: FunctionDescriptor, lam: TotalComplex, n: int) -> Matrix:
    """f(J_n(lambda)): upper triangular Toeplitz with f^(q)(lam)/q! on the
    q-th superdiagonal."""
    _check_radius(f, lam)
    derivs = []
    for q in range(n):
        v = f.derivative_value(lam, q)
        factor = Fraction(1, math.factorial(q)) if v.backend == EXACT else 1.0 / math.factorial(q)
        derivs.append(v.scale_rational(factor))
    zero = TotalComplex.zero(derivs[0].backend, derivs[0].eps)
    rows = [[derivs[j - i] if j >= i else zero for j in range(n)] for i in range(n)]
    return Matrix.from_rows(rows)


@dataclass(frozen=True)
class KappaResult:
    kappa: int
    value: TotalComplex  # the first nonvanishing derivative


def derivative_order_kappa(
    f: FunctionDescriptor, lam: TotalComplex, max_order: int,
    eps_deriv: float = DERIVATIVE_EPS,
) -> KappaResult:
    """Smallest order >= 1 with a nonvanishing derivative at lam.

    Exact coefficients test for exact zero; oracles use |value| > eps_deriv.
    Raises KappaNotFound past max_order (f locally constant as far as the
    block sizes can see).
    """
    _check_radius(f, lam)
    for order in range(1, max_order + 1):
        v = f.derivative_value(lam, order)
        if v.backend == EXACT:
            nonzero = not v.is_zero()
        else:
            nonzero = abs(v.to_complex()) > eps_deriv
        if nonzero:
            return KappaResult(order, v)
    raise KappaNotFound(f"no nonvanishing derivative up to order {max_order}")


def split_block(n: int, kappa: int) -> tuple:
    """Sizes of the kappa pieces a block of size n breaks into, plus the
    prefix-sum gap vector against the unsplit block (length kappa).

    ell = n + kappa - kappa*ceil(n/kappa) pieces have size ceil(n/kappa);
    the remaining kappa - ell pieces have size ceil(n/kappa) - 1 and zero
    parts are dropped.
    """
    if n < 1 or kappa < 1:
        raise ValueError("block size and kappa must be positive")
    c = -(-n // kappa)
    ell = n + kappa - kappa * c
    part = tuple([c] * ell + [c - 1] * (kappa - ell))
    part = tuple(v for v in part if v > 0)
    gaps = tuple(
        n - j * c if j <= ell else n + j - ell - j * c
        for j in range(1, kappa + 1)
    )
    return part, gaps


def rank_oracle_split(n: int, kappa: int) -> Partition:
    """Independent check of split_block: build the generic n x n banded
    matrix whose lowest nonzero superdiagonal sits at offset kappa, and read
    the block sizes off its rank sequence."""
    if kappa >= n:
        return tuple([1] * n)
    coeffs = [exact(0)] * kappa + [exact(1)] * (n - kappa)
    f = PolynomialFunction(tuple(coeffs))
    m = f_jordan_block(f, exact(0), n)
    counts = []
    r_prev = n
    power = Matrix.identity(n)
    while True:
        power = power @ m
        r = rank_exact(power)
        c = r_prev - r
        if c == 0:
            break
        counts.append(c)
        r_prev = r
    sizes = []
    counts.append(0)
    for s in range(len(counts) - 1, 0, -1):
        sizes.extend([s] * (counts[s - 1] - counts[s]))
    return tuple(sorted(sizes, reverse=True))


def gdod_two_blocks(n1: int, n2: int, kappa: int, j: int) -> int:
    """Closed-form prefix-sum gap at index j between the merged split of two
    blocks (n1 >= n2) and the partition (n1, n2), without building either."""
    if n2 > n1 or n2 < 1 or kappa < 1:
        raise ValueError("need n1 >= n2 >= 1 and kappa >= 1")
    if j < 1:
        raise ValueError("index must be >= 1")
    c1 = -(-n1 // kappa)
    c2 = -(-n2 // kappa)
    ell1 = n1 + kappa - kappa * c1
    ell2 = n2 + kappa - kappa * c2
    if j > 2 * kappa:
        return 0
    if c1 == c2:
        if j == 1:
            return n1 - c1
        if j <= ell1 + ell2:
            return n1 + n2 - j * c1
        return n1 + n2 - (ell1 + ell2) * c1 - (j - ell1 - ell2) * (c1 - 1)
    if c1 - 1 == c2:
        if j == 1:
            return n1 - c1
        if j <= ell1:
            return n1 + n2 - j * c1
        if j <= kappa + ell2:
            return n1 + n2 - ell1 * c1 - (j - ell1) * c2
        return n1 + n2 - ell1 * c1 - (kappa - ell1 + ell2) * c2 - (j - kappa - ell2) * (c2 - 1)
    # c2 < c1 - 1
    if j == 1:
        return n1 - c1
    if j <= ell1:
        return n1 + n2 - j * c1
    if j <= kappa:
        return n1 + n2 - ell1 * c1 - (j - ell1) * (c1 - 1)
    if j <= kappa + ell2:
        return n1 + n2 - ell1 * c1 - (kappa - ell1) * (c1 - 1) - (j - kappa) * c2
    return (n1 + n2 - ell1 * c1 - (kappa - ell1) * (c1 - 1)
            - ell2 * c2 - (j - kappa - ell2) * (c2 - 1))


def eta(f: FunctionDescriptor, lam: TotalComplex, sizes: Partition) -> Partition:
    """Block-size partition of the lam-group of f(X) given the block sizes
    of X at lam.  A missing nonzero derivative (f locally constant) maps
    every vector to an eigenvector: all-ones."""
    sizes = as_partition(sizes)
    try:
        kappa = derivative_order_kappa(f, lam, max(sizes)).kappa
    except KappaNotFound:
        return tuple([1] * sum(sizes))
    return eta_given_kappa(sizes, kappa)


def eta_given_kappa(sizes: Partition, kappa: int) -> Partition:
    return merge_desc(*(split_block(n, kappa)[0] for n in sizes))


def _sorted_desc_items(items):
    return sorted(items, key=cmp_to_key(lambda a, b: cmp_total(b[0], a[0]).value))


def repr_of_fx(f: FunctionDescriptor, rx: SNRepresentation):
    """SN representation of f(X) from the representation of X.

    Returns (representation, gap_vectors) where gap_vectors[k] is the
    prefix-sum gap between the refined structure of the k-th eigenvalue
    group (ordered by decreasing f-image) and its original partition.
    Eigenvalue groups whose f-images collide are merged.
    """
    items = []
    for lam, part in zip(rx.eigenvalues, rx.partitions):
        _check_radius(f, lam)
        mu = f(lam)
        e = eta(f, lam, part)
        gaps = tuple(prefix(part, j) - prefix(e, j) for j in range(1, len(e) + 1))
        items.append((mu, e, gaps))
    items = _sorted_desc_items(items)
    gap_vectors = tuple(g for _, _, g in items)
    eigs, parts = [], []
    for mu, e, _ in items:
        if eigs and cmp_total(eigs[-1], mu) is OrderOutcome.EQUAL:
            parts[-1] = merge_desc(parts[-1], e)
        else:
            eigs.append(mu)
            parts.append(e)
    return SNRepresentation(tuple(eigs), tuple(parts)), gap_vectors


def f_of_jordan_spec(f: FunctionDescriptor, rx: SNRepresentation) -> Matrix:
    """Explicit block-diagonal f(direct sum of Jordan blocks): the matrix
    oracle for repr_of_fx."""
    blocks = []
    for lam, part in zip(rx.eigenvalues, rx.partitions):
        for size in part:
            blocks.append(f_jordan_block(f, lam, size))
    return block_diag(blocks)


def gdod_f_g(
    f: FunctionDescriptor, rx: SNRepresentation,
    g: FunctionDescriptor, ry: SNRepresentation,
) -> tuple:
    """Per-eigenvalue prefix-sum gaps between the refined structures induced
    by f on X and g on Y, aligned by decreasing function image.

    At each aligned index the gap runs in whichever direction dominance
    holds; IncomparableNilpotent reports the first index where neither
    direction does.  Shorter lists are padded with empty partitions.
    """
    fx = _sorted_desc_items(
        [(f(lam), eta(f, lam, part)) for lam, part in zip(rx.eigenvalues, rx.partitions)]
    )
    gy = _sorted_desc_items(
        [(g(lam), eta(g, lam, part)) for lam, part in zip(ry.eigenvalues, ry.partitions)]
    )
    k = max(len(fx), len(gy))
    etas_f = [e for _, e in fx] + [()] * (k - len(fx))
    etas_g = [e for _, e in gy] + [()] * (k - len(gy))
    out = []
    for idx, (ef, eg) in enumerate(zip(etas_f, etas_g)):
        length = max(len(ef), len(eg), 1)
        if dominance_check(eg, ef):
            vec = tuple(prefix(ef, j) - prefix(eg, j) for j in range(1, length + 1))
        elif dominance_check(ef, eg):
            vec = tuple(prefix(eg, j) - prefix(ef, j) for j in range(1, length + 1))
        else:
            raise IncomparableNilpotent(idx)
        out.append(vec)
    return tuple(out)
