"""Design verification, tightness certificates and the two built-in
constructions (the 12-point tight 5-design in CP^1 and regular polygons in
RP^1)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exactnum import Cyclotomic, abs2, default_tol, euler_phi, to_float
from .jacobi import (
    DesignParams,
    RationalPolynomial,
    annihilator,
    design_bound,
    shifted_P,
    weight_moment,
)
from .projective import GramMatrix, PointSet, angle_set, gram


class NotADesignError(ValueError):
    pass


def float_threshold(size: int) -> float:
    return size * 1e-8


@dataclass
class DesignVerdict:
    is_design: bool
    t_checked: int
    exact: bool
    # per degree i = 1..t: max over y of |sum|, as a float
    residuals: list[float]
    # per degree: True when every sum vanished (exactly, or within threshold)
    passed: list[bool]
    # exact backend only: the sum with the largest float magnitude, per degree
    worst_sums: list = field(default_factory=list)
    kind: str = "jacobi"

    @property
    def failed_degrees(self) -> list[int]:
        return [i + 1 for i, ok in enumerate(self.passed) if not ok]


def _eval_matrix(poly: RationalPolynomial, g: GramMatrix, cache: dict | None = None) -> np.ndarray:
    """Entrywise p((x, y)) over the Gram matrix."""
    if not g.exact:
        return np.polynomial.polynomial.polyval(g.entries, poly.float_coeffs() or [0.0])
    cache = {} if cache is None else cache
    size = g.size
    out = np.empty((size, size), dtype=object)
    for i in range(size):
        for j in range(i, size):
            v = g.entries[i, j]
            key = (poly, v)
            if key not in cache:
                cache[key] = poly(v)
            out[i, j] = out[j, i] = cache[key]
    return out


def _exact_sum(values):
    acc = Fraction(0)
    for v in values:
        acc = acc + v
    return acc


def _verdict(rows_per_degree, exact: bool, size: int, t: int, kind: str) -> DesignVerdict:
    residuals, passed, worst = [], [], []
    thr = float_threshold(size)
    for sums in rows_per_degree:
        mags = [abs(to_float(v)) for v in sums]
        k = int(np.argmax(mags))
        residuals.append(mags[k])
        if exact:
            passed.append(all(not v for v in sums))
            worst.append(sums[k])
        else:
            passed.append(mags[k] <= thr)
    return DesignVerdict(all(passed), t, exact, residuals, passed, worst, kind)


def is_t_design(ps: PointSet, t: int, g: GramMatrix | None = None) -> DesignVerdict:
    """Check sum_x P_i((x, y)) = 0 for every y in X and 1 <= i <= t."""
    if t < 1:
        raise ValueError("t must be >= 1")
    params = DesignParams(ps.field, ps.n, t)
    g = gram(ps) if g is None else g
    cache: dict = {}
    rows = []
    for i in range(1, t + 1):
        mat = _eval_matrix(shifted_P(params, i), g, cache)
        if g.exact:
            rows.append([_exact_sum(mat[:, y]) for y in range(g.size)])
        else:
            rows.append(list(mat.sum(axis=0)))
    return _verdict(rows, g.exact, g.size, t, "jacobi")


def averaging_check(ps: PointSet, t: int, g: GramMatrix | None = None) -> DesignVerdict:
    """Check (1/|X|) sum_x (x, y)^k equals the k-th weight moment, k = 1..t.

    Residuals are the row-average minus the moment.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    params = DesignParams(ps.field, ps.n, t)
    g = gram(ps) if g is None else g
    size = g.size
    rows = []
    if g.exact:
        powers = g.entries.copy()
        for k in range(1, t + 1):
            if k > 1:
                powers = powers * g.entries
            mu = weight_moment(params, k)
            rows.append([_exact_sum(powers[:, y]) / size - mu for y in range(size)])
    else:
        for k in range(1, t + 1):
            mu = float(weight_moment(params, k))
            rows.append(list((g.entries ** k).sum(axis=0) / size - mu))
    return _verdict(rows, g.exact, size, t, "moments")


@dataclass
class TightnessCertificate:
    s: int
    e: int
    eps: int
    t_max: int
    size: int
    bound: Fraction
    cardinality_match: bool
    angle_roots_match: bool
    annihilator: RationalPolynomial
    angles: tuple = ()

    @property
    def tight(self) -> bool:
        return self.t_max == self.s + self.e and self.cardinality_match


def tightness(ps: PointSet, t: int, tol: float | None = None) -> TightnessCertificate:
    """Certify a t-design against the tight-design characterization: t = s + e,
    |X| = R_e^eps(1), and the angle set equals the roots of xi^eps R_e^eps."""
    tol = default_tol() if tol is None else tol
    g = gram(ps)
    if not is_t_design(ps, t, g).is_design:
        raise NotADesignError(f"input is not a {t}-design")
    angles = angle_set(g, tol)
    s, e, eps = angles.s, angles.e, angles.eps
    limit = s + e
    t_max = t
    if limit > t:
        verdict = is_t_design(ps, limit, g)
        for ok in verdict.passed[t:]:
            if not ok:
                break
            t_max += 1
    tight_params = DesignParams(ps.field, ps.n, 2 * e + eps)
    bound = design_bound(tight_params)
    ann = annihilator(tight_params)
    if angles.exact:
        roots_ok = all(not ann(v) for v in angles.values)
    else:
        roots_ok = all(abs(to_float(ann(v))) <= tol for v in angles.values)
    # xi^eps R_e^eps has exactly e + eps simple roots, so containment with
    # matching counts is set equality
    roots_ok = roots_ok and len(angles.values) == ann.degree
    return TightnessCertificate(
        s=s, e=e, eps=eps, t_max=t_max, size=len(ps), bound=bound,
        cardinality_match=len(ps) == bound, angle_roots_match=roots_ok,
        annihilator=ann, angles=angles.values,
    )


# -- constructions ---------------------------------------------------------

def construct_cp1_5design() -> PointSet:
    """Projective image of a binary-icosahedral orbit: 12 points in CP^1.

    Coordinates are homogeneous with the normalizer mu dropped, so everything
    stays in Q(zeta_5).
    """
    eta = Cyclotomic.zeta(5, 1)
    lam = eta + eta ** 4
    one, zero = Cyclotomic.rational(5, 1), Cyclotomic.rational(5, 0)
    assert lam * lam + lam - 1 == 0
    allowed = {zero, 2 - lam, 3 + lam}
    for r in range(5):
        assert abs2(eta ** r - 1) in allowed
    pts = [(one, zero), (zero, one)]
    pts += [(lam * eta ** (k - 3), one) for k in range(3, 8)]
    pts += [(eta ** (k - 3), -lam) for k in range(8, 13)]
    return PointSet("C", 1, tuple(pts), "exact")


def polygon_order(t: int) -> int:
    # cos and sin of k*pi/(t+1) both live in Q(zeta_M) once 4 | M
    M = 2 * (t + 1)
    return M if M % 4 == 0 else 2 * M


def construct_rp1_polygon(t: int) -> PointSet:
    """The t+1 lines through a regular (2t+2)-gon, as exact points of RP^1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    M = polygon_order(t)
    step = M // (2 * (t + 1))
    i = Cyclotomic.zeta(M, M // 4)
    pts = []
    for k in range(t + 1):
        z = Cyclotomic.zeta(M, k * step)
        zbar = z.conj()
        cos = (z + zbar) / 2
        sin = (z - zbar) / (2 * i)
        pts.append((cos, sin))
    return PointSet("R", 1, tuple(pts), "exact")


def rp1_rational(t: int) -> bool:
    """Whether the angle set of the tight t-design in RP^1 is rational."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return euler_phi(t + 1) <= 2
