"""Majorization of complex vectors under the lexicographic total order,
affine T-transforms, and generalized doubly stochastic matrices.

A T-transform here is affine: beta is an arbitrary complex scalar, not
restricted to [0, 1].  The decomposition of a strict majorization into
T-transform steps mirrors the classical Muirhead construction, working on
non-increasingly sorted copies and re-sorting (via explicit swap steps)
after every mixing step so that replaying the returned transforms on
sort_desc(y) reproduces x exactly.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotMajorized
from .linalg import Matrix
from .scalar import (
    EXACT,
    OrderOutcome,
    TotalComplex,
    cmp_total,
    exact,
    sort_desc,
)


class Majorization(enum.Enum):
    STRICT = "strict"
    WEAK = "weak"
    NONE = "none"


def _prefix_sums(v: Sequence[TotalComplex]) -> list:
    out = []
    acc = None
    for z in v:
        acc = z if acc is None else acc + z
        out.append(acc)
    return out


def majorize_check(x: Sequence[TotalComplex], y: Sequence[TotalComplex]) -> Majorization:
    """Does x majorize-below y?  STRICT needs equal totals, WEAK only needs
    every prefix sum of sort_desc(x) to stay <= the matching prefix of y."""
    if len(x) != len(y):
        raise DimensionMismatch(f"{len(x)} vs {len(y)}")
    if not x:
        raise DimensionMismatch("empty vectors")
    px = _prefix_sums(sort_desc(x))
    py = _prefix_sums(sort_desc(y))
    for a, b in zip(px[:-1], py[:-1]):
        if cmp_total(a, b) is OrderOutcome.GREATER:
            return Majorization.NONE
    total = cmp_total(px[-1], py[-1])
    if total is OrderOutcome.EQUAL:
        return Majorization.STRICT
    if total is OrderOutcome.LESS:
        return Majorization.WEAK
    return Majorization.NONE


@dataclass(frozen=True)
class TTransform:
    """Affine mixing of coordinates i < j (0-based):
    v_i -> beta*v_i + (1-beta)*v_j,  v_j -> beta*v_j + (1-beta)*v_i."""

    i: int
    j: int
    beta: TotalComplex

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise DimensionMismatch(f"need 0 <= i < j, got ({self.i}, {self.j})")

    @property
    def beta_in_unit_interval(self) -> bool:
        """True when beta is a real number in [0, 1] (the convex case)."""
        if not self.beta.is_real():
            return False
        zero = TotalComplex.zero(self.beta.backend, self.beta.eps)
        one = zero + (exact(1) if self.beta.backend == EXACT else
                      TotalComplex(1.0, 0.0, self.beta.backend, self.beta.eps))
        return (cmp_total(self.beta, zero) is not OrderOutcome.LESS
                and cmp_total(self.beta, one) is not OrderOutcome.GREATER)

    def matrix(self, n: int) -> Matrix:
        if self.j >= n:
            raise DimensionMismatch(f"transform indices ({self.i},{self.j}) exceed size {n}")
        backend, eps = self.beta.backend, self.beta.eps
        one = exact(1) if backend == EXACT else TotalComplex(1.0, 0.0, backend, eps)
        rows = [list(r) for r in Matrix.identity(n, backend, eps).rows]
        comp = one - self.beta
        rows[self.i][self.i] = self.beta
        rows[self.j][self.j] = self.beta
        rows[self.i][self.j] = comp
        rows[self.j][self.i] = comp
        return Matrix.from_rows(rows)


def t_transform_apply(v: Sequence[TotalComplex], t: TTransform) -> tuple:
    if t.j >= len(v):
        raise IndexError(f"transform indices ({t.i},{t.j}) exceed vector length {len(v)}")
    one = exact(1) if t.beta.backend == EXACT else TotalComplex(1.0, 0.0, t.beta.backend, t.beta.eps)
    comp = one - t.beta
    out = list(v)
    out[t.i] = t.beta * v[t.i] + comp * v[t.j]
    out[t.j] = t.beta * v[t.j] + comp * v[t.i]
    return tuple(out)


def _swap_steps(current: list, target: list) -> list:
    """Selection-sort style swap transforms (beta = 0) turning current into
    target, which must be a rearrangement of it."""
    swaps = []
    cur = list(current)
    zero = TotalComplex.zero(cur[0].backend, cur[0].eps) if cur else None
    for pos in range(len(cur)):
        if cmp_total(cur[pos], target[pos]) is OrderOutcome.EQUAL:
            continue
        src = next(
            k for k in range(pos + 1, len(cur))
            if cmp_total(cur[k], target[pos]) is OrderOutcome.EQUAL
        )
        swaps.append(TTransform(pos, src, zero))
        cur[pos], cur[src] = cur[src], cur[pos]
    return swaps


def t_transform_decompose(x, y) -> list:
    transforms, _ = t_transform_decompose_trace(x, y)
    return transforms


def t_transform_decompose_trace(x, y) -> tuple:
    """Decompose a strict majorization x < y into T-transform steps.

    Returns (transforms, intermediates): replaying the transforms in order on
    sort_desc(y) yields x; intermediates are the working vectors after each
    mixing step (each still strictly majorizes x and is majorized by y).
    """
    if majorize_check(x, y) is not Majorization.STRICT:
        raise NotMajorized("decomposition requires strict majorization")
    target = list(sort_desc(x))
    w = list(sort_desc(y))
    n = len(w)
    transforms: list = []
    intermediates: list = []
    one = exact(1) if w[0].backend == EXACT else TotalComplex(1.0, 0.0, w[0].backend, w[0].eps)
    for _ in range(n * n + n + 1):
        if all(cmp_total(a, b) is OrderOutcome.EQUAL for a, b in zip(w, target)):
            break
        i = max(k for k in range(n) if cmp_total(target[k], w[k]) is OrderOutcome.LESS)
        j = min(
            k for k in range(i + 1, n) if cmp_total(target[k], w[k]) is OrderOutcome.GREATER
        )
        gap_i = w[i] - target[i]
        gap_j = target[j] - w[j]
        eps_step = gap_i if cmp_total(gap_i, gap_j) is not OrderOutcome.GREATER else gap_j
        beta = one - eps_step / (w[i] - w[j])
        step = TTransform(i, j, beta)
        transforms.append(step)
        w = list(t_transform_apply(w, step))
        resorted = list(sort_desc(w))
        transforms.extend(_swap_steps(w, resorted))
        w = resorted
        intermediates.append(tuple(w))
    else:
        raise NotMajorized("decomposition failed to converge")
    transforms.extend(_swap_steps(w, list(x)))
    return transforms, intermediates


def gds_check(m: Matrix) -> bool:
    """Generalized doubly stochastic: every row and column sums to one
    (entries may be arbitrary complex numbers)."""
    if not m.is_square:
        raise DimensionMismatch("generalized doubly stochastic check needs a square matrix")
    n = m.shape[0]
    backend, eps = m.backend, m.rows[0][0].eps
    one = exact(1) if backend == EXACT else TotalComplex(1.0, 0.0, backend, eps)
    for line in itertools.chain(m.rows, zip(*m.rows)):
        acc = line[0]
        for z in line[1:]:
            acc = acc + z
        if cmp_total(acc, one) is not OrderOutcome.EQUAL:
            return False
    return True


def gds_from_transforms(transforms: Sequence[TTransform], n: int) -> Matrix:
    """Product of the transform matrices, in application order, so that
    row-vector replay y @ P equals applying the transforms one by one."""
    backend = transforms[0].beta.backend if transforms else EXACT
    eps = transforms[0].beta.eps if transforms else 0.0
    p = Matrix.identity(n, backend, eps)
    for t in transforms:
        p = p @ t.matrix(n)
    return p


def apply_row_vector(v: Sequence[TotalComplex], m: Matrix) -> tuple:
    """Row-vector times matrix."""
    if len(v) != m.shape[0]:
        raise DimensionMismatch(f"{len(v)} vs {m.shape}")
    out = []
    for col in zip(*m.rows):
        acc = v[0] * col[0]
        for a, b in zip(v[1:], col[1:]):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)
