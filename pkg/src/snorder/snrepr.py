"""Spectral-and-nilpotent (SN) representations of square matrices and the
partial order built from them.

A representation stores the distinct eigenvalues (strictly decreasing under
the complex total order) together with one Jordan block-size partition per
eigenvalue.  Eigenvalues are caller-supplied throughout: structure recovery
only needs ranks of powers of (X - lambda*I), never a general eigensolver.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from math import lcm
from typing import Sequence

from .errors import (
    DimensionMismatch,
    EmptySpec,
    SpectrumMismatch,
)
from .linalg import (
    Matrix,
    block_diag,
    gaussian_int_matmul,
    rank_exact,
    rank_float,
    rank_gaussian_int_rows,
)
from .majorization import Majorization, majorize_check
from .partitions import Partition, as_partition, dominance_check, merge_desc
from .scalar import EXACT, OrderOutcome, TotalComplex, cmp_total, exact


class SNOVerdict(enum.Enum):
    EQUAL = "equal"
    STRICT_LESS = "strict_less"
    WEAK_LESS = "weak_less"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class JordanSpec:
    """Raw (eigenvalue, block sizes) pairs; duplicates allowed."""

    blocks: tuple  # of (TotalComplex, Partition)

    def __post_init__(self):
        if not self.blocks:
            raise EmptySpec("at least one eigenvalue block is required")

    @staticmethod
    def of(*pairs) -> "JordanSpec":
        return JordanSpec(tuple((lam, as_partition(sizes)) for lam, sizes in pairs))

    @property
    def dimension(self) -> int:
        return sum(sum(sizes) for _, sizes in self.blocks)


@dataclass(frozen=True)
class SNRepresentation:
    """Canonical form: eigenvalues strictly decreasing, partitions
    non-increasing, aligned index-wise."""

    eigenvalues: tuple  # distinct TotalComplex, strictly decreasing
    partitions: tuple   # one Partition per eigenvalue

    @property
    def dimension(self) -> int:
        return sum(sum(p) for p in self.partitions)

    @property
    def spectral_vector(self) -> tuple:
        """Each eigenvalue repeated by its algebraic multiplicity."""
        out = []
        for lam, part in zip(self.eigenvalues, self.partitions):
            out.extend([lam] * sum(part))
        return tuple(out)

    def multiplicity(self, k: int) -> int:
        return sum(self.partitions[k])

    def max_block(self) -> int:
        return max(max(p) for p in self.partitions)


def canonical_repr(spec: JordanSpec) -> SNRepresentation:
    """Merge duplicate eigenvalues and sort both levels canonically."""
    items = [(lam, as_partition(sizes)) for lam, sizes in spec.blocks]
    items.sort(key=cmp_to_key(lambda a, b: cmp_total(b[0], a[0]).value))
    eigs, parts = [], []
    for lam, part in items:
        if eigs and cmp_total(eigs[-1], lam) is OrderOutcome.EQUAL:
            parts[-1] = merge_desc(parts[-1], part)
        else:
            eigs.append(lam)
            parts.append(tuple(sorted(part, reverse=True)))
    return SNRepresentation(tuple(eigs), tuple(parts))


def jordan_matrix(spec: JordanSpec) -> Matrix:
    """Direct sum of Jordan blocks in canonical order."""
    rep = canonical_repr(spec)
    backend = rep.eigenvalues[0].backend
    eps = rep.eigenvalues[0].eps
    one = exact(1) if backend == EXACT else TotalComplex(1.0, 0.0, backend, eps)
    zero = TotalComplex.zero(backend, eps)
    blocks = []
    for lam, part in zip(rep.eigenvalues, rep.partitions):
        for size in part:
            rows = [
                [lam if i == j else one if j == i + 1 else zero for j in range(size)]
                for i in range(size)
            ]
            blocks.append(Matrix.from_rows(rows))
    return block_diag(blocks)


def assemble(spec: JordanSpec, u: Matrix) -> Matrix:
    """Similarity transform U J U^{-1} of the canonical Jordan matrix."""
    j = jordan_matrix(spec)
    if u.shape != j.shape:
        raise DimensionMismatch(f"transform {u.shape} vs spec dimension {j.shape}")
    return u @ j @ u.inverse()


def _rank(mat: Matrix) -> int:
    if mat.backend == EXACT:
        return rank_exact(mat)
    return rank_float(mat.to_numpy())


def _dedupe_eigenvalues(eigenvalues: Sequence[TotalComplex]) -> list:
    out = []
    for lam in eigenvalues:
        if not any(cmp_total(lam, seen) is OrderOutcome.EQUAL for seen in out):
            out.append(lam)
    return out


def _clear_denominators(mat: Matrix):
    """Scale an exact matrix by the lcm of all entry denominators, returning
    rows of (re, im) Gaussian-integer pairs.  Ranks of powers are unchanged."""
    dens = [
        d
        for row in mat.rows
        for a in row
        for d in (a.re.denominator, a.im.denominator)
    ]
    mul = lcm(*dens)
    return [[(int(a.re * mul), int(a.im * mul)) for a in row] for row in mat.rows]


def repr_from_matrix(x: Matrix, eigenvalues: Sequence[TotalComplex]) -> SNRepresentation:
    """Recover the SN representation from ranks of powers of (X - lambda*I).

    The number of Jordan blocks of size >= s equals
    rank((X - lambda I)^(s-1)) - rank((X - lambda I)^s).
    Raises SpectrumMismatch when the supplied eigenvalues do not exhaust the
    dimension of x.
    """
    if not x.is_square:
        raise DimensionMismatch("square matrix required")
    m = x.shape[0]
    blocks = []
    covered = 0
    for lam in _dedupe_eigenvalues(eigenvalues):
        shift = x - Matrix.identity(m, x.backend, x.rows[0][0].eps).scale(lam)
        counts = []  # counts[s-1] = number of blocks of size >= s
        r_prev = m
        if x.backend == EXACT:
            # powers in raw Gaussian-integer arithmetic: rescaling by the
            # common denominator leaves every rank unchanged
            shift_int = _clear_denominators(shift)
            power_int = [
                [(int(i == j), 0) for j in range(m)] for i in range(m)
            ]
        else:
            power = Matrix.identity(m, x.backend, x.rows[0][0].eps)
        while True:
            if x.backend == EXACT:
                power_int = gaussian_int_matmul(power_int, shift_int)
                r = rank_gaussian_int_rows([list(row) for row in power_int])
            else:
                power = power @ shift
                r = _rank(power)
            c = r_prev - r
            if c == 0:
                break
            counts.append(c)
            r_prev = r
            if len(counts) > m:
                raise SpectrumMismatch("rank sequence failed to stabilize")
        if not counts:
            continue
        sizes = []
        counts.append(0)
        for s in range(len(counts) - 1, 0, -1):
            sizes.extend([s] * (counts[s - 1] - counts[s]))
        part = tuple(sorted(sizes, reverse=True))
        covered += sum(part)
        blocks.append((lam, part))
    if covered != m:
        raise SpectrumMismatch(
            f"eigenvalues account for dimension {covered} of {m}"
        )
    return canonical_repr(JordanSpec(tuple(blocks)))


def _pad_nilpotent(parts: tuple, k: int) -> tuple:
    return parts + ((),) * (k - len(parts))


def compare_nilpotent(a: Sequence[Partition], b: Sequence[Partition]) -> SNOVerdict:
    """Lexicographic dominance comparison of aligned partition lists.

    Shorter lists are padded with empty partitions.  At the first index whose
    partitions differ, strict dominance decides; anything else is
    incomparable in the <= direction (call with swapped arguments to probe
    the other direction).
    """
    k = max(len(a), len(b))
    a = _pad_nilpotent(tuple(a), k)
    b = _pad_nilpotent(tuple(b), k)
    for pa, pb in zip(a, b):
        if tuple(pa) == tuple(pb):
            continue
        if dominance_check(pa, pb):
            return SNOVerdict.STRICT_LESS
        return SNOVerdict.INCOMPARABLE
    return SNOVerdict.EQUAL


def compare_sno(rx: SNRepresentation, ry: SNRepresentation) -> SNOVerdict:
    """Spectral-then-nilpotent order.

    Spectral vectors decide first via weak majorization; equal spectra defer
    to the nilpotent comparison.  STRICT_LESS on the spectral level is
    reserved for strictly smaller prefix sums at every index.
    """
    sx, sy = rx.spectral_vector, ry.spectral_vector
    if len(sx) != len(sy):
        raise DimensionMismatch(f"dimension {len(sx)} vs {len(sy)}")
    if all(cmp_total(a, b) is OrderOutcome.EQUAL for a, b in zip(sx, sy)):
        return compare_nilpotent(rx.partitions, ry.partitions)
    verdict = majorize_check(sx, sy)
    if verdict is Majorization.NONE:
        return SNOVerdict.INCOMPARABLE
    # spectral vectors differ and x is weakly below y
    acc_x, acc_y = None, None
    all_strict = True
    for a, b in zip(sx, sy):
        acc_x = a if acc_x is None else acc_x + a
        acc_y = b if acc_y is None else acc_y + b
        if cmp_total(acc_x, acc_y) is not OrderOutcome.LESS:
            all_strict = False
            break
    return SNOVerdict.STRICT_LESS if all_strict else SNOVerdict.WEAK_LESS
