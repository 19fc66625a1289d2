"""Monotonicity and convexity of matrix functions under the
spectral-and-nilpotent order.

Certificates are hypothesis checks: a non-None certificate is always
cross-checked against the direct comparison of the two image
representations (``monotonicity_verify_direct``).  Convexity is probed
pointwise on eigenvalue-accessible matrices (triangular or 2x2), and the
unitary-dilation identities behind the Hansen-Pedersen style argument are
verified numerically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ContractionViolated,
    KappaNotFound,
    NotAProjection,
    NotSNOrdered,
    SnorderError,
    SpectrumUnavailable,
)
from .linalg import Matrix, block_diag, spectral_norm
from .matfunc import (
    FunctionDescriptor,
    PolynomialFunction,
    derivative_order_kappa,
    repr_of_fx,
)
from .partitions import dominance_check
from .scalar import (
    EXACT,
    OrderOutcome,
    TotalComplex,
    approx,
    cmp_total,
    exact,
    sort_desc,
)
from .schur import MajorizationCert, _pointwise_monotonicity, majorization_preserving_check
from .snrepr import SNOVerdict, SNRepresentation, compare_sno

HP_TOL = 1e-8


# -- eigenvalue extraction for the supported input classes -----------------


def _is_triangular(m: Matrix, upper: bool) -> bool:
    n = m.shape[0]
    for i in range(n):
        for j in range(n):
            if (j < i if upper else j > i) and not m.rows[i][j].is_zero():
                return False
    return True


def _fraction_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _exact_complex_sqrt(z: TotalComplex) -> Optional[TotalComplex]:
    a, b = z.re, z.im
    if b == 0:
        r = _fraction_sqrt(a if a >= 0 else -a)
        if r is None:
            return None
        return exact(r, 0) if a >= 0 else exact(0, r)
    rho = _fraction_sqrt(a * a + b * b)
    if rho is None:
        return None
    p2 = (a + rho) / 2
    p = _fraction_sqrt(p2)
    if p is None or p == 0:
        return None
    return exact(p, b / (2 * p))


def closed_form_eigenvalues(m: Matrix) -> tuple:
    """Eigenvalues without a general solver: triangular matrices read the
    diagonal; 2x2 matrices use the quadratic formula (exact only when the
    discriminant has a rational square root)."""
    if not m.is_square:
        raise SpectrumUnavailable("non-square matrix")
    n = m.shape[0]
    if _is_triangular(m, upper=True) or _is_triangular(m, upper=False):
        return tuple(m.rows[i][i] for i in range(n))
    if n == 2:
        a, b = m.rows[0]
        c, d = m.rows[1]
        tr = a + d
        det = a * d - b * c
        half = Fraction(1, 2) if m.backend == EXACT else 0.5
        disc = tr * tr - det.scale_rational(4)
        if m.backend == EXACT:
            root = _exact_complex_sqrt(disc)
            if root is None:
                raise SpectrumUnavailable("irrational 2x2 eigenvalues in exact mode")
        else:
            r = cmath.sqrt(disc.to_complex())
            root = approx(r.real, r.imag, a.eps)
        return (
            (tr + root).scale_rational(half),
            (tr - root).scale_rational(half),
        )
    raise SpectrumUnavailable(f"no closed-form spectrum for shape {m.shape}")


def repr_from_accessible(m: Matrix) -> SNRepresentation:
    from .snrepr import repr_from_matrix

    return repr_from_matrix(m, closed_form_eigenvalues(m))


# -- monotonicity -----------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityCertificate:
    case: str  # one of "A".."E"
    details: dict = field(default_factory=dict, hash=False, compare=False)


def _kappas(f: FunctionDescriptor, rep: SNRepresentation) -> list:
    """kappa per eigenvalue, None meaning no nonvanishing derivative up to
    the largest block (effectively infinite)."""
    out = []
    for lam, part in zip(rep.eigenvalues, rep.partitions):
        try:
            out.append(derivative_order_kappa(f, lam, max(part)).kappa)
        except KappaNotFound:
            out.append(None)
    return out


def monotonicity_certificate(
    f: FunctionDescriptor, rx: SNRepresentation, ry: SNRepresentation
) -> Optional[MonotonicityCertificate]:
    """Try to certify f(X) below f(Y) in the SN order from X below Y.

    Case I (spectra differ, weakly ordered): A increasing map with the
    difference-sum conditions, B the decreasing analogue, C spectra that f
    collapses onto each other while Y alone keeps nontrivial blocks.
    Case II (equal spectra, strictly ordered block structure): D increasing
    f with first derivative nonvanishing at every shared eigenvalue, E the
    decreasing analogue, which additionally needs entrywise strict block
    dominance so the order survives the spectrum reversal.
    """
    verdict = compare_sno(rx, ry)
    if verdict not in (SNOVerdict.STRICT_LESS, SNOVerdict.WEAK_LESS):
        raise NotSNOrdered(f"representations compare as {verdict.value}")
    sx, sy = rx.spectral_vector, ry.spectral_vector
    spectra_equal = all(
        cmp_total(a, b) is OrderOutcome.EQUAL for a, b in zip(sx, sy)
    )
    if not spectra_equal:
        res = majorization_preserving_check(f, sx, sy)
        if res.kind is MajorizationCert.CERTIFIED_INCREASING:
            return MonotonicityCertificate("A")
        if res.kind is MajorizationCert.CERTIFIED_DECREASING:
            return MonotonicityCertificate("B")
        cert_c = _try_case_c(f, rx, ry)
        if cert_c is not None:
            return cert_c
        return None
    # Case II: spectra equal, nilpotent level strictly below
    inc, dec = _pointwise_monotonicity(f, list(rx.eigenvalues))
    kx = _kappas(f, rx)
    ky = _kappas(f, ry)
    first_order = all(k == 1 for k in kx) and all(k == 1 for k in ky)
    if inc and first_order:
        return MonotonicityCertificate("D", {"kappa_x": kx, "kappa_y": ky})
    entrywise = len(rx.partitions) == len(ry.partitions) and all(
        dominance_check(px, py) and px != py
        for px, py in zip(rx.partitions, ry.partitions)
    )
    if dec and first_order and entrywise:
        return MonotonicityCertificate("E", {"kappa_x": kx, "kappa_y": ky})
    return None


def _try_case_c(f, rx, ry) -> Optional[MonotonicityCertificate]:
    if len(rx.eigenvalues) != len(ry.eigenvalues):
        return None
    fx = [f(v) for v in rx.eigenvalues]
    fy = [f(v) for v in ry.eigenvalues]
    # compare collapsed spectra with multiplicities, both sorted by image
    def collapsed(images, rep):
        pairs = list(zip(images, [sum(p) for p in rep.partitions]))
        expanded = []
        for mu, mult in pairs:
            expanded.extend([mu] * mult)
        return sort_desc(expanded)

    cx, cy = collapsed(fx, rx), collapsed(fy, ry)
    if len(cx) != len(cy) or any(
        cmp_total(a, b) is not OrderOutcome.EQUAL for a, b in zip(cx, cy)
    ):
        return None
    if [sum(p) for p in rx.partitions] != [sum(p) for p in ry.partitions]:
        return None
    kx = _kappas(f, rx)
    ky = _kappas(f, ry)
    flat_x_ok = all(
        k is None or k >= max(part) for k, part in zip(kx, rx.partitions)
    )
    y_first_order = all(k == 1 for k in ky)
    y_nontrivial = any(max(p) > 1 for p in ry.partitions)
    if flat_x_ok and y_first_order and y_nontrivial:
        return MonotonicityCertificate("C", {"kappa_x": kx, "kappa_y": ky})
    return None


def monotonicity_verify_direct(
    f: FunctionDescriptor, rx: SNRepresentation, ry: SNRepresentation
) -> SNOVerdict:
    """Ground truth for any certificate: build both image representations
    and compare them."""
    fx, _ = repr_of_fx(f, rx)
    fy, _ = repr_of_fx(f, ry)
    return compare_sno(fx, fy)


# -- convexity probing -------------------------------------------------------


@dataclass(frozen=True)
class ConvexityPoint:
    t: object
    verdict: Optional[SNOVerdict]
    greater: bool  # mix image strictly above the average: a falsification
    error: Optional[str] = None


@dataclass
class ConvexityReport:
    points: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(
            p.error is None and not p.greater and p.verdict in (
                SNOVerdict.EQUAL, SNOVerdict.WEAK_LESS, SNOVerdict.STRICT_LESS,
            )
            for p in self.points
        )

    @property
    def witnesses(self) -> list:
        return [p for p in self.points if p.greater]


def _as_scalar(t, backend: str) -> TotalComplex:
    if isinstance(t, TotalComplex):
        return t
    if backend == EXACT:
        return exact(Fraction(t))
    return approx(float(t))


def convexity_check(
    f: PolynomialFunction, a: Matrix, b: Matrix, ts: Sequence
) -> ConvexityReport:
    """Compare f(t*A + (1-t)*B) with t*f(A) + (1-t)*f(B) under the SN order
    for each mixing weight t.  Inputs must be eigenvalue-accessible
    (triangular or 2x2); failures are recorded per point."""
    report = ConvexityReport()
    one = exact(1) if a.backend == EXACT else approx(1.0)
    for t_raw in ts:
        t = _as_scalar(t_raw, a.backend)
        comp = one - t
        try:
            mix = a.scale(t) + b.scale(comp)
            lhs = f.eval_matrix(mix)
            lhs_eigs = tuple(f(lam) for lam in closed_form_eigenvalues(mix))
            rhs = f.eval_matrix(a).scale(t) + f.eval_matrix(b).scale(comp)
            from .snrepr import repr_from_matrix

            rep_l = repr_from_matrix(lhs, lhs_eigs)
            rep_r = repr_from_matrix(rhs, closed_form_eigenvalues(rhs))
            verdict = compare_sno(rep_l, rep_r)
            greater = False
            if verdict is SNOVerdict.INCOMPARABLE:
                swapped = compare_sno(rep_r, rep_l)
                greater = swapped in (SNOVerdict.STRICT_LESS, SNOVerdict.WEAK_LESS)
            report.points.append(ConvexityPoint(t_raw, verdict, greater))
        except SnorderError as err:
            report.points.append(ConvexityPoint(t_raw, None, False, error=str(err)))
    return report


# -- unitary-dilation identities ---------------------------------------------


def _psd_sqrt(h: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh((h + h.conj().T) / 2)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def hp_identities_check(c: np.ndarray, x: np.ndarray, t: float) -> dict:
    """Residuals of the dilation identities used in the convexity argument.

    Builds the two unitary dilations of a contraction C, the rotation W3 and
    the projection P, and reports Frobenius residuals of unitarity, of the
    defect commutation C (I - C*C)^{1/2} = (I - CC*)^{1/2} C, and of the
    block expansions of W_i^* diag(X, X) W_i.
    """
    c = np.asarray(c, dtype=complex)
    x = np.asarray(x, dtype=complex)
    n = c.shape[0]
    if spectral_norm(c) > 1.0 + HP_TOL:
        raise ContractionViolated(f"spectral norm {spectral_norm(c):.6g} exceeds 1")
    eye = np.eye(n, dtype=complex)
    s1 = _psd_sqrt(eye - c.conj().T @ c)  # (I - C*C)^{1/2}
    s2 = _psd_sqrt(eye - c @ c.conj().T)  # (I - CC*)^{1/2}
    w1 = np.block([[c, s2], [s1, -c.conj().T]])
    w2 = np.block([[c, -s2], [s1, c.conj().T]])
    eye2 = np.eye(2 * n, dtype=complex)
    xbar = np.block([[x, np.zeros((n, n))], [np.zeros((n, n)), x]])

    def bl(m11, m12, m21, m22):
        return np.block([[m11, m12], [m21, m22]])

    exp1 = bl(
        c.conj().T @ x @ c + s1 @ x @ s1,
        c.conj().T @ x @ s2 - s1 @ x @ c.conj().T,
        s2 @ x @ c - c @ x @ s1,
        s2 @ x @ s2 + c @ x @ c.conj().T,
    )
    exp2 = bl(
        c.conj().T @ x @ c + s1 @ x @ s1,
        -c.conj().T @ x @ s2 + s1 @ x @ c.conj().T,
        -s2 @ x @ c + c @ x @ s1,
        s2 @ x @ s2 + c @ x @ c.conj().T,
    )
    rt, rt1 = math.sqrt(t), math.sqrt(1.0 - t)
    w3 = np.block([[rt * eye, -rt1 * eye], [rt1 * eye, rt * eye]])
    p = np.block([[eye, np.zeros((n, n))], [np.zeros((n, n)), np.zeros((n, n))]])
    return {
        "w1_unitary": float(np.linalg.norm(w1.conj().T @ w1 - eye2)),
        "w2_unitary": float(np.linalg.norm(w2.conj().T @ w2 - eye2)),
        "w3_unitary": float(np.linalg.norm(w3.conj().T @ w3 - eye2)),
        "commutation": float(np.linalg.norm(c @ s1 - s2 @ c)),
        "w1_block_expansion": float(np.linalg.norm(w1.conj().T @ xbar @ w1 - exp1)),
        "w2_block_expansion": float(np.linalg.norm(w2.conj().T @ xbar @ w2 - exp2)),
        "p_idempotent": float(np.linalg.norm(p @ p - p)),
        "p_hermitian": float(np.linalg.norm(p - p.conj().T)),
    }


# -- pinching / congruence item checks ----------------------------------------


@dataclass(frozen=True)
class ItemCheck:
    item: int
    verdict_raw: Optional[SNOVerdict]
    verdict_shifted: Optional[SNOVerdict]
    error: Optional[str] = None


def _shifted(f: PolynomialFunction) -> PolynomialFunction:
    """f - f(0): pin the origin so congruence by a strict contraction has a
    chance of preserving the order."""
    coeffs = list(f.coefficients)
    coeffs[0] = TotalComplex.zero(coeffs[0].backend, coeffs[0].eps)
    return PolynomialFunction(tuple(coeffs))


def hp_item_checks(
    f: PolynomialFunction,
    xs: Sequence[Matrix],
    cs: Sequence[Matrix],
    p: Optional[Matrix] = None,
) -> list:
    """Probe the three congruence/pinching comparisons that characterize
    operator convexity on concrete inputs, with both the raw f and the
    origin-pinned f - f(0).

    Item 2: f(C* X C) vs C* f(X) C for a single contraction.
    Item 3: f(sum C_i* X_i C_i) vs sum C_i* f(X_i) C_i for a contractive
    column (checked against the explicit stacked-block assembly).
    Item 4: pinching by a projection P mixing X and Y.
    """
    results = []
    n = cs[0].shape[0]
    gram = None
    for c in cs:
        term = c.conj_transpose() @ c
        gram = term if gram is None else gram + term
    if spectral_norm(gram.to_numpy()) > 1.0 + HP_TOL:
        raise ContractionViolated("sum of C_i* C_i exceeds the identity")

    # The right-hand sides depend on f itself, so build them per function.
    def rhs_for(fn, item):
        if item == 2:
            return cs[0].conj_transpose() @ fn.eval_matrix(xs[0]) @ cs[0]
        if item == 3:
            acc = None
            for c, xm in zip(cs, xs):
                term = c.conj_transpose() @ fn.eval_matrix(xm) @ c
                acc = term if acc is None else acc + term
            return acc
        # item 4
        q = Matrix.identity(n, p.backend, p.rows[0][0].eps) - p
        return (p @ fn.eval_matrix(xs[0]) @ p) + (q @ fn.eval_matrix(xs[1]) @ q)

    def lhs_arg(item):
        if item == 2:
            return cs[0].conj_transpose() @ xs[0] @ cs[0]
        if item == 3:
            acc = None
            for c, xm in zip(cs, xs):
                term = c.conj_transpose() @ xm @ c
                acc = term if acc is None else acc + term
            return acc
        q = Matrix.identity(n, p.backend, p.rows[0][0].eps) - p
        return (p @ xs[0] @ p) + (q @ xs[1] @ q)

    def _compare_with_rhs(fn, arg, rhs):
        from .snrepr import repr_from_matrix

        lhs = fn.eval_matrix(arg)
        rep_l = repr_from_matrix(lhs, tuple(fn(lam) for lam in closed_form_eigenvalues(arg)))
        rep_r = repr_from_accessible(rhs)
        return compare_sno(rep_l, rep_r)

    items = [2, 3] + ([4] if p is not None else [])
    if p is not None:
        pp = p @ p - p
        if pp.frobenius_norm() > HP_TOL or (p - p.conj_transpose()).frobenius_norm() > HP_TOL:
            raise NotAProjection("p fails P^2 = P = P*")
    for item in items:
        if item == 4 and len(xs) < 2:
            results.append(ItemCheck(4, None, None, error="item 4 needs two matrices"))
            continue
        arg = lhs_arg(item)
        try:
            raw = _compare_with_rhs(f, arg, rhs_for(f, item))
            err = None
        except SnorderError as e:
            raw, err = None, str(e)
        try:
            g = _shifted(f)
            shifted = _compare_with_rhs(g, arg, rhs_for(g, item))
        except SnorderError as e:
            shifted = None
            err = err or str(e)
        results.append(ItemCheck(item, raw, shifted, error=err))
    return results


def stacked_assembly_residual(xs: Sequence[Matrix], cs: Sequence[Matrix]) -> float:
    """Frobenius distance between sum C_i* X_i C_i and the explicit stacked
    column / block-diagonal assembly of the same expression."""
    cbar = np.vstack([c.to_numpy() for c in cs])
    xbb = block_diag(xs).to_numpy()
    direct = None
    for c, xm in zip(cs, xs):
        term = c.conj_transpose() @ xm @ c
        direct = term if direct is None else direct + term
    return float(np.linalg.norm(cbar.conj().T @ xbb @ cbar - direct.to_numpy()))
