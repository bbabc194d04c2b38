"""Bose-Mesner algebra of a projective t-design.

For a t-design X with s = floor((t+1)/2) the matrices M_i = [P_i((x, y))],
0 <= i <= s, form a basis of the algebra spanned by the zero-one class
matrices Delta_zeta. Rescaling gives pairwise orthogonal idempotents
L_i = M_i / (rho_i |X|) summing to the identity.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .designs import NotADesignError, _eval_matrix, is_t_design
from .exactnum import as_rational, format_scalar, to_float
from .jacobi import (
    DesignParams,
    chi,
    design_bound,
    rank_closed,
    rank_last,
    rank_last_from_unity,
    rank_last_kernel_form,
    shifted_P,
)
from .projective import GramMatrix, PointSet, angle_set, gram

FLOAT_TOL = 1e-8


@dataclass
class Check:
    identity: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"identity": self.identity, "passed": self.passed,
                "witness": list(self.witness) if self.witness is not None else None,
                "detail": self.detail}


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _scale(mat: np.ndarray, factor) -> np.ndarray:
    if mat.dtype == object:
        out = np.empty_like(mat)
        for idx, v in np.ndenumerate(mat):
            out[idx] = v * factor
        return out
    return mat * float(factor)


def _trace(mat: np.ndarray):
    if mat.dtype == object:
        acc = Fraction(0)
        for k in range(mat.shape[0]):
            acc = acc + mat[k, k]
        return acc
    return float(np.trace(mat))


def _first_mismatch(a: np.ndarray, b: np.ndarray, tol: float):
    """Index of the first differing entry, or None."""
    if a.dtype == object or b.dtype == object:
        for idx in np.ndindex(a.shape):
            if a[idx] != b[idx]:
                return tuple(int(k) for k in idx)
        return None
    bad = np.argwhere(np.abs(a - b) > tol)
    return tuple(int(k) for k in bad[0]) if len(bad) else None


def _identity(size: int, exact: bool) -> np.ndarray:
    if not exact:
        return np.eye(size)
    out = np.full((size, size), Fraction(0), dtype=object)
    for k in range(size):
        out[k, k] = Fraction(1)
    return out


def _zeros(size: int, exact: bool) -> np.ndarray:
    return np.full((size, size), Fraction(0), dtype=object) if exact else np.zeros((size, size))


def matrix_rank(mat: np.ndarray, tol: float = FLOAT_TOL) -> int:
    """Rank by exact Gaussian elimination (object arrays) or by counting
    eigenvalues above ``tol`` times the spectral radius (float arrays)."""
    mat = np.asarray(mat)
    if mat.dtype != object:
        ev = np.linalg.eigvalsh(0.5 * (mat + mat.T))
        top = np.max(np.abs(ev)) if ev.size else 0.0
        if top == 0.0:
            return 0
        return int(np.sum(np.abs(ev) > tol * top))
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    live_cols = list(range(ncols))
    for r in range(nrows):
        pivot = None
        for i in range(r, nrows):
            for j in live_cols:
                if rows[i][j]:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        rows[r], rows[i] = rows[i], rows[r]
        live_cols.remove(j)
        inv = 1 / rows[r][j]
        prow = [v * inv if v else v for v in rows[r]]
        rows[r] = prow
        for k in range(r + 1, nrows):
            f = rows[k][j]
            if f:
                rows[k] = [a - f * b if b else a for a, b in zip(rows[k], prow)]
        rank += 1
    return rank


class BoseMesnerAlgebra:
    def __init__(self, ps: PointSet, t: int, g: GramMatrix, tol: float):
        self.params = DesignParams(ps.field, ps.n, t)
        self.gram = g
        self.exact = g.exact
        self.size = g.size
        self.tol = tol
        s = self.params.s
        cache: dict = {}
        self.M = [_eval_matrix(shifted_P(self.params, i), g, cache) for i in range(s + 1)]
        if not self.exact:
            self.M = [np.asarray(m, dtype=float) for m in self.M]

        angles = angle_set(g, tol)
        self.zetas = list(angles.values) + [Fraction(1) if self.exact else 1.0]
        self.Delta = {}
        for z in self.zetas:
            if self.exact:
                d = np.array([[1 if v == z else 0 for v in row] for row in g.entries])
            else:
                d = (np.abs(g.entries - z) <= tol).astype(int)
            self.Delta[z] = d

        self.chi = [chi(self.params, i) for i in range(self.params.e + 1)]
        self.rho = list(self.chi[: s + 1])
        self.lambda_s = None
        if self.params.eps:
            ms = self.M[s]
            denom = _trace(ms @ ms)
            if not denom:
                raise AssertionError("sum of P_s^2 over X x X vanished")
            ps1 = shifted_P(self.params, s)(1)
            lam = (self.size * ps1) / denom if self.exact else self.size * float(ps1) / denom
            q = as_rational(lam)
            self.lambda_s = q if q is not None else lam
            self.rho.append(1 / (self.lambda_s * self.size))
        self.L = [_scale(m, 1 / (r * self.size)) for m, r in zip(self.M, self.rho)]

    @property
    def s(self) -> int:
        return self.params.s

    @cached_property
    def ranks(self) -> list[int]:
        return [matrix_rank(l) for l in self.L]

    @cached_property
    def traces(self) -> list:
        return [_trace(l) for l in self.L]

    def summary(self) -> dict:
        return {
            "field": self.params.field, "n": self.params.n, "t": self.params.t,
            "size": self.size, "s": self.s, "backend": "exact" if self.exact else "float",
            "ranks": self.ranks,
            "traces": [format_scalar(v) for v in self.traces],
            "rho": [format_scalar(r) for r in self.rho],
            "chi": [format_scalar(c) for c in self.chi],
            "lambda_s": None if self.lambda_s is None else format_scalar(self.lambda_s),
        }


def build(ps: PointSet, t: int, tol: float = FLOAT_TOL) -> BoseMesnerAlgebra:
    if t < 1:
        raise ValueError("t must be >= 1")
    g = gram(ps)
    if not is_t_design(ps, t, g).is_design:
        raise NotADesignError(f"input is not a {t}-design")
    return BoseMesnerAlgebra(ps, t, g, tol)


def verify_mult_table(alg: BoseMesnerAlgebra) -> Report:
    """M_i M_k = |X| delta_ik rho_min(i,k) M_i for all 0 <= i, k <= s."""
    report = Report("multiplication table")
    zero = _zeros(alg.size, alg.exact)
    for i, mi in enumerate(alg.M):
        for k, mk in enumerate(alg.M):
            prod = mi @ mk
            want = _scale(mi, alg.size * alg.rho[i]) if i == k else zero
            bad = _first_mismatch(prod, want, alg.tol)
            report.checks.append(Check(
                f"M_{i} M_{k}", bad is None,
                None if bad is None else (i, k) + bad,
            ))
    return report


def verify_idempotents(alg: BoseMesnerAlgebra) -> Report:
    report = Report("idempotents")
    L, exact, size, tol = alg.L, alg.exact, alg.size, alg.tol
    zero = _zeros(size, exact)
    for i, li in enumerate(L):
        bad = _first_mismatch(li @ li, li, tol)
        report.checks.append(Check(f"L_{i}^2 = L_{i}", bad is None, None if bad is None else (i, i) + bad))
    for i in range(len(L)):
        for k in range(i + 1, len(L)):
            bad = _first_mismatch(L[i] @ L[k], zero, tol)
            report.checks.append(Check(f"L_{i} L_{k} = 0", bad is None,
                                       None if bad is None else (i, k) + bad))
    total = L[0]
    for li in L[1:]:
        total = total + li
    bad = _first_mismatch(total, _identity(size, exact), tol)
    report.checks.append(Check("sum L_i = I", bad is None, bad))

    for i, (r, tr) in enumerate(zip(alg.ranks, alg.traces)):
        ok = (tr == r) if exact else abs(tr - r) <= tol * size
        report.checks.append(Check(f"rank L_{i} = trace L_{i}", ok, None if ok else (i,),
                                   f"rank {r}, trace {format_scalar(tr)}"))
    p = alg.params
    for i in range(p.e + 1):
        want = rank_closed(p, i)
        report.checks.append(Check(f"rank L_{i} = closed form", alg.ranks[i] == want,
                                   None if alg.ranks[i] == want else (i,),
                                   f"matrix {alg.ranks[i]}, formula {want}"))
    if p.eps:
        s = p.s
        got = alg.ranks[s]
        want = rank_last_from_unity(p, size)
        report.checks.append(Check("rank L_s = |X| - sum_{i<s} rank L_i", got == want,
                                   None if got == want else (s,), f"matrix {got}, formula {want}"))
        want = rank_last_kernel_form(p, size)
        report.checks.append(Check("rank L_s = |X| - kernel form", got == want,
                                   None if got == want else (s,), f"matrix {got}, formula {want}"))
        if size == design_bound(p):
            want = rank_last(p)
            report.checks.append(Check("rank L_s = tight closed form", got == want,
                                       None if got == want else (s,), f"matrix {got}, formula {want}"))
    return report


def delta_coefficients(alg: BoseMesnerAlgebra, mat: np.ndarray) -> dict | None:
    """Coefficients of ``mat`` in the Delta basis, or None when ``mat`` is not
    constant on some inner-product class."""
    out = {}
    for z, d in alg.Delta.items():
        idx = np.argwhere(d == 1)
        vals = [mat[tuple(ix)] for ix in idx]
        first = vals[0]
        if alg.exact:
            if any(v != first for v in vals):
                return None
        elif max(abs(v - first) for v in vals) > alg.tol:
            return None
        out[z] = first
    return out


def verify_closure(alg: BoseMesnerAlgebra) -> Report:
    """Every product M_i M_k lies in span{Delta_zeta}, and M_0..M_s are a basis."""
    report = Report("closure and basis")
    total = sum(alg.Delta.values())
    report.checks.append(Check("sum Delta_zeta = J", bool(np.all(total == 1))))
    for i, mi in enumerate(alg.M):
        for k, mk in enumerate(alg.M):
            coeffs = delta_coefficients(alg, mi @ mk)
            report.checks.append(Check(f"M_{i} M_{k} in D(X)", coeffs is not None,
                                       None if coeffs is not None else (i, k)))
    # coefficient matrix of the M_i against the Delta basis
    rows = [[delta_coefficients(alg, m)[z] for z in alg.zetas] for m in alg.M]
    coeff = np.array(rows, dtype=object if alg.exact else float)
    if alg.exact:
        r = matrix_rank(coeff)
    else:
        r = int(np.linalg.matrix_rank(coeff))
    report.checks.append(Check("M_0..M_s linearly independent", r == alg.s + 1,
                               detail=f"rank {r} of {alg.s + 1}"))
    return report


@dataclass(frozen=True)
class ETraceComparison:
    Q_s_at_1: Fraction
    rank_Ls: Fraction
    differs: bool

    @property
    def E_s_idempotent_possible(self) -> bool:
        return not self.differs


def E_trace_comparison(params: DesignParams) -> ETraceComparison:
    """Compare tr E_s = Q_s(1) with rank L_s for a tight (2s-1)-design."""
    if params.t % 2 == 0:
        raise ValueError("E_trace_comparison needs odd t")
    q = rank_closed(params, params.s)
    r = rank_last(params)
    return ETraceComparison(q, r, q != r)


def float_image(mat: np.ndarray) -> np.ndarray:
    if mat.dtype != object:
        return mat
    return np.vectorize(to_float, otypes=[float])(mat)
