"""Small dense matrices over total-order complex scalars.

Exact matrices hold Fraction-backed scalars; rank is computed by
fraction-free (Bareiss) elimination over Gaussian integers after clearing
denominators.  Float matrices go through numpy SVD with an explicit
singular-value gap check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Sequence

import numpy as np

from .errors import DimensionMismatch, RankAmbiguous, SingularTransform
from .scalar import EXACT, DEFAULT_EPS, TotalComplex, approx, exact

SVD_TOL = 1e-8
SVD_GAP = 10.0


@dataclass(frozen=True)
class Matrix:
    rows: tuple

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DimensionMismatch("ragged rows")

    # -- constructors --------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence[TotalComplex]]) -> "Matrix":
        return Matrix(tuple(tuple(r) for r in rows))

    @staticmethod
    def identity(n: int, backend: str = EXACT, eps: float = DEFAULT_EPS) -> "Matrix":
        one = exact(1) if backend == EXACT else approx(1.0, 0.0, eps)
        zero = TotalComplex.zero(backend, eps)
        return Matrix(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(m: int, n: int, backend: str = EXACT, eps: float = DEFAULT_EPS) -> "Matrix":
        zero = TotalComplex.zero(backend, eps)
        return Matrix(tuple(tuple(zero for _ in range(n)) for _ in range(m)))

    @staticmethod
    def from_numpy(a: np.ndarray, eps: float = DEFAULT_EPS) -> "Matrix":
        return Matrix.from_rows(
            [[approx(float(z.real), float(z.imag), eps) for z in row] for row in np.atleast_2d(a)]
        )

    # -- shape ----------------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        m, n = self.shape
        return m == n

    @property
    def backend(self) -> str:
        return self.rows[0][0].backend

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return Matrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return Matrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix(tuple(out))

    def scale(self, c: TotalComplex) -> "Matrix":
        return Matrix(tuple(tuple(c * a for a in row) for row in self.rows))

    def power(self, p: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatch("power of non-square matrix")
        result = Matrix.identity(self.shape[0], self.backend, self.rows[0][0].eps)
        base = self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base if p > 1 else base
            p >>= 1
        return result

    def conj_transpose(self) -> "Matrix":
        return Matrix(tuple(tuple(a.conjugate() for a in col) for col in zip(*self.rows)))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    # -- solves -----------------------------------------------------------

    def inverse(self) -> "Matrix":
        """Gauss-Jordan inverse; raises SingularTransform when singular."""
        if not self.is_square:
            raise DimensionMismatch("inverse of non-square matrix")
        n = self.shape[0]
        aug = [list(row) + list(irow) for row, irow in
               zip(self.rows, Matrix.identity(n, self.backend, self.rows[0][0].eps).rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if piv is None:
                raise SingularTransform("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [a / p for a in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return Matrix.from_rows([row[n:] for row in aug])

    # -- conversions --------------------------------------------------------

    def to_numpy(self) -> np.ndarray:
        return np.array([[a.to_complex() for a in row] for row in self.rows], dtype=complex)

    def map(self, fn: Callable[[TotalComplex], TotalComplex]) -> "Matrix":
        return Matrix(tuple(tuple(fn(a) for a in row) for row in self.rows))

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.to_numpy()))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    backend = blocks[0].backend
    eps = blocks[0].rows[0][0].eps
    n = sum(b.shape[0] for b in blocks)
    zero = TotalComplex.zero(backend, eps)
    rows = [[zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = b.shape[0]
        for i in range(k):
            for j in range(k):
                rows[off + i][off + j] = b.rows[i][j]
        off += k
    return Matrix.from_rows(rows)


# -- exact rank via fraction-free elimination over Z[i] -------------------


def _cdiv_exact(num, den):
    a, b = num
    c, d = den
    rho = c * c + d * d
    qr, rr = divmod(a * c + b * d, rho)
    qi, ri = divmod(b * c - a * d, rho)
    if rr or ri:
        raise ArithmeticError("non-exact Gaussian-integer division in Bareiss step")
    return (qr, qi)


def _gaussian_int_rows(mat: Matrix):
    """Clear denominators row-wise; rank is invariant under row scaling."""
    out = []
    for row in mat.rows:
        dens = [a.re.denominator for a in row] + [a.im.denominator for a in row]
        mul = lcm(*dens) if dens else 1
        out.append([(int(a.re * mul), int(a.im * mul)) for a in row])
    return out


def gaussian_int_matmul(a, b):
    """Product of two square matrices of (re, im) Gaussian-integer pairs."""
    n = len(a)
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            sr = si = 0
            for k in range(n):
                xr, xi = ai[k]
                yr, yi = b[k][j]
                sr += xr * yr - xi * yi
                si += xr * yi + xi * yr
            row.append((sr, si))
        out.append(row)
    return out


def rank_exact(mat: Matrix) -> int:
    return rank_gaussian_int_rows(_gaussian_int_rows(mat))


def rank_gaussian_int_rows(rows) -> int:
    """Bareiss fraction-free rank of a matrix of (re, im) integer pairs.
    Mutates rows."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    prev = (1, 0)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != (0, 0)), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr, p = rows[r], rows[r][c]
        for i in range(r + 1, m):
            ri = rows[i]
            t = ri[c]
            for j in range(c + 1, n):
                pa, pb = p
                xa, xb = ri[j]
                ta, tb = t
                ya, yb = pr[j]
                num = (pa * xa - pb * xb - ta * ya + tb * yb,
                       pa * xb + pb * xa - ta * yb - tb * ya)
                ri[j] = _cdiv_exact(num, prev)
            ri[c] = (0, 0)
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank_float(a: np.ndarray, tol: float = SVD_TOL, gap: float = SVD_GAP) -> int:
    """SVD rank with threshold tol * sigma_max and an explicit gap check."""
    s = np.linalg.svd(np.atleast_2d(a), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    cut = tol * s[0]
    kept = s[s > cut]
    dropped = s[s <= cut]
    if kept.size and dropped.size and dropped[0] > 0.0:
        if kept[-1] / dropped[0] < gap:
            raise RankAmbiguous(
                f"singular values straddle the threshold: {kept[-1]:.3e} vs {dropped[0]:.3e}"
            )
    return int(kept.size)


def rank(mat: Matrix) -> int:
    if mat.backend == EXACT:
        return rank_exact(mat)
    return rank_float(mat.to_numpy())


def spectral_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a, 2))
