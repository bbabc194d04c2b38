"""Jacobi polynomials with rational parameters and the design-theoretic
quantities built from them: shifted polynomials, weight moments, the
constants chi_i, closed-form idempotent ranks, the tight-design bound and
the annihilator whose roots are the angles of a tight design.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import QuadraticSurd, pochhammer
from .exactnum.rational import factorial

FIELDS = ("R", "C", "H")
_HALF_DIM = {"R": Fraction(1, 2), "C": Fraction(1), "H": Fraction(2)}


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class DesignParams:
    """(F, n, t) together with every derived parameter.

    ``m`` is half the real dimension of F, ``N = m(n+1)``, and the Jacobi
    parameters are ``alpha = N - m - 1`` and ``beta = m - 1``.
    """

    field: str
    n: int
    t: int

    def __post_init__(self):
        if self.field not in FIELDS:
            raise DomainError(f"field must be one of {FIELDS}, got {self.field!r}")
        if self.n < 1:
            raise DomainError("n must be >= 1")
        if self.t < 1:
            raise DomainError("t must be >= 1")

    @property
    def m(self) -> Fraction:
        return _HALF_DIM[self.field]

    @property
    def N(self) -> Fraction:
        return self.m * (self.n + 1)

    @property
    def alpha(self) -> Fraction:
        return self.N - self.m - 1

    @property
    def beta(self) -> Fraction:
        return self.m - 1

    @property
    def s(self) -> int:
        return (self.t + 1) // 2

    @property
    def e(self) -> int:
        return self.t // 2

    @property
    def eps(self) -> int:
        return self.t % 2

    def with_t(self, t: int) -> "DesignParams":
        return DesignParams(self.field, self.n, t)


class RationalPolynomial:
    """Dense polynomial with Fraction coefficients, lowest degree first.

    ``domain`` is ``"tau"`` for polynomials on [-1, 1] and ``"xi"`` for
    polynomials on [0, 1]; it is a tag only.
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs, domain: str = "xi"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            other = RationalPolynomial([other], self.domain)
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (k - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (k - len(other.coeffs))
        return RationalPolynomial([x + y for x, y in zip(a, b)], self.domain)

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial([-c for c in self.coeffs], self.domain)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial([c * other for c in self.coeffs], self.domain)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial([], self.domain)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out, self.domain)

    __rmul__ = __mul__

    def compose_affine(self, a, b, domain: str) -> "RationalPolynomial":
        """p(a*x + b) as a polynomial in x."""
        lin = RationalPolynomial([b, a], domain)
        acc = RationalPolynomial([], domain)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        acc.domain = domain
        return acc

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        var = "tau" if self.domain == "tau" else "xi"
        terms = [f"{c}*{var}^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"RationalPolynomial({' + '.join(terms) or '0'})"

    def __str__(self):
        var = "tau" if self.domain == "tau" else "xi"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = f"{c}*" if mono else str(c)
                if mono and c < 0:
                    coef = f"-{-c}*"
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ") or "0"


@lru_cache(maxsize=4096)
def jacobi_poly(alpha, beta, i: int) -> RationalPolynomial:
    """P_i^{(alpha, beta)}(tau) normalized so that P_i(1) = (alpha+1)_i / i!."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha <= -1 or beta <= -1:
        raise DomainError("Jacobi parameters must exceed -1")
    if i < 0:
        raise DomainError("degree must be >= 0")
    p0 = RationalPolynomial([1], "tau")
    if i == 0:
        return p0
    ab = alpha + beta
    p1 = RationalPolynomial([(alpha - beta) / 2, (ab + 2) / 2], "tau")
    prev, cur = p0, p1
    for k in range(2, i + 1):
        c = 2 * k + ab
        a_k = 2 * k * (k + ab) * (c - 2)
        b_lin = RationalPolynomial([(c - 1) * (alpha * alpha - beta * beta),
                                    (c - 1) * c * (c - 2)], "tau")
        c_k = 2 * (k + alpha - 1) * (k + beta - 1) * c
        nxt = (b_lin * cur - prev * c_k) * (1 / a_k)
        prev, cur = cur, nxt
    cur.domain = "tau"
    return cur


def shifted_P(params: DesignParams, i: int) -> RationalPolynomial:
    """P_i(xi) = P_i^{(alpha, beta)}(2 xi - 1)."""
    return _shifted(params.alpha, params.beta, i)


@lru_cache(maxsize=4096)
def _shifted(alpha, beta, i):
    return jacobi_poly(alpha, beta, i).compose_affine(2, -1, "xi")


def R_poly(params: DesignParams) -> RationalPolynomial:
    """R_e^eps(xi) = ((N)_s / (m)_s) * P_e^{(alpha+1, beta+eps)}(2 xi - 1)."""
    scale = pochhammer(params.N, params.s) / pochhammer(params.m, params.s)
    base = jacobi_poly(params.alpha + 1, params.beta + params.eps, params.e)
    return base.compose_affine(2, -1, "xi") * scale


def annihilator(params: DesignParams) -> RationalPolynomial:
    """xi^eps * R_e^eps(xi)."""
    r = R_poly(params)
    if params.eps:
        return r * RationalPolynomial([0, 1])
    return r


def weight_constant(params: DesignParams) -> float:
    """Normalizing constant of the Jacobi weight on [-1, 1] (float)."""
    a, b = float(params.alpha), float(params.beta)
    return math.exp(math.lgamma(a + b + 2) - (a + b + 1) * math.log(2)
                    - math.lgamma(a + 1) - math.lgamma(b + 1))


def weight_moment(params: DesignParams, k: int) -> Fraction:
    # integral of xi^k against the normalized weight, xi = (1 + tau)/2
    if k < 0:
        raise DomainError("moment order must be >= 0")
    return pochhammer(params.beta + 1, k) / pochhammer(params.alpha + params.beta + 2, k)


def integrate_poly(params: DesignParams, p: RationalPolynomial) -> Fraction:
    return sum((c * weight_moment(params, k) for k, c in enumerate(p.coeffs)), Fraction(0))


def chi(params: DesignParams, i: int) -> Fraction:
    """chi_i = integral of P_i^2 divided by P_i(1)."""
    p = shifted_P(params, i)
    return integrate_poly(params, p * p) / p(1)


def _rank_numerator_head(N: Fraction, i: int) -> Fraction:
    # (N)_{i-1} (N + 2i - 1); at i = 0 the convention (g-1)(g)_{-1} = 1
    # applies for every g, including N = 1 where (N)_{-1} alone is undefined.
    if i == 0:
        return Fraction(1)
    return pochhammer(N, i - 1) * (N + 2 * i - 1)


def rank_closed(params: DesignParams, i: int) -> Fraction:
    """(N)_{i-1} (N-m)_i (N+2i-1) / ((m)_i i!)."""
    if i < 0:
        raise DomainError("index must be >= 0")
    N, m = params.N, params.m
    return (_rank_numerator_head(N, i) * pochhammer(N - m, i)
            / (pochhammer(m, i) * factorial(i)))


def rank_last(params: DesignParams) -> Fraction:
    """Rank of the last idempotent L_s of a tight design with odd t = 2s - 1."""
    if params.t % 2 == 0:
        raise DomainError("rank_last needs odd t; use rank_closed(params, s) for even t")
    s, N, m = params.s, params.N, params.m
    return pochhammer(N, s - 1) * pochhammer(N - m, s) / (pochhammer(m, s) * factorial(s - 1))


def rank_last_from_unity(params: DesignParams, size) -> Fraction:
    """|X| minus the closed-form ranks of L_0 .. L_{s-1}."""
    return Fraction(size) - sum((rank_closed(params, i) for i in range(params.s)), Fraction(0))


def rank_last_kernel_form(params: DesignParams, size) -> Fraction:
    """|X| - (N)_{s-1} (N-m+1)_{s-1} / ((m)_{s-1} (s-1)!)."""
    s, N, m = params.s, params.N, params.m
    return Fraction(size) - (pochhammer(N, s - 1) * pochhammer(N - m + 1, s - 1)
                             / (pochhammer(m, s - 1) * factorial(s - 1)))


def design_bound(params: DesignParams) -> Fraction:
    """R_e^eps(1) = (N)_s (N-m+1)_e / ((m)_s e!), the tight-design cardinality."""
    s, e, N, m = params.s, params.e, params.N, params.m
    out = pochhammer(N, s) * pochhammer(N - m + 1, e) / (pochhammer(m, s) * factorial(e))
    if out.denominator != 1 or out <= 0:
        raise AssertionError(f"design bound {out} is not a positive integer for {params}")
    return out


@dataclass(frozen=True)
class AngleRoots:
    values: list[float]
    exact: list | None = None


def _bisect(f, lo: float, hi: float, tol: float) -> float:
    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tight_angle_set(params: DesignParams, tol: float = 1e-13, samples: int = 512) -> AngleRoots:
    """Roots of xi^eps R_e^eps(xi): the angle set of any tight design with
    these parameters. Exact closed forms are attached when e <= 2."""
    r = R_poly(params)
    fc = r.float_coeffs()

    def f(x):
        acc = 0.0
        for c in reversed(fc):
            acc = acc * x + c
        return acc

    grid = [k / samples for k in range(samples + 1)]
    roots = []
    prev_x, prev_f = grid[0], f(grid[0])
    for x in grid[1:]:
        fx = f(x)
        if fx == 0.0:
            roots.append(x)
        elif prev_f != 0.0 and (fx < 0) != (prev_f < 0):
            roots.append(_bisect(f, prev_x, x, tol))
        prev_x, prev_f = x, fx
    roots = [x for x in roots if 0.0 < x < 1.0]
    if len(roots) != params.e:
        raise RuntimeError(f"found {len(roots)} roots of R in (0,1), expected {params.e}")
    values = ([0.0] if params.eps else []) + sorted(roots)

    exact = None
    if params.e <= 2:
        cs = r.coeffs
        if params.e == 0:
            nonzero = []
        elif params.e == 1:
            nonzero = [-cs[0] / cs[1]]
        else:
            nonzero = QuadraticSurd.quadratic_roots(cs[2], cs[1], cs[0])
        exact = ([Fraction(0)] if params.eps else []) + nonzero
    return AngleRoots(values, exact)
