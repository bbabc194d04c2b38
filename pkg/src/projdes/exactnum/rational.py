"""Rational helpers: Pochhammer symbols, factorization, Euler's totient."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def pochhammer(gamma, i: int) -> Fraction:
    """Rising product prod_{l=1}^{i} (gamma - 1 + l).

    ``i == 0`` gives 1 and ``i == -1`` gives ``1/(gamma - 1)``, so that
    ``(gamma - 1) * pochhammer(gamma, -1) == 1``.
    """
    gamma = as_fraction(gamma)
    if i < -1:
        raise ValueError("pochhammer index must be >= -1")
    if i == -1:
        if gamma == 1:
            raise ZeroDivisionError("pochhammer(1, -1) is undefined")
        return 1 / (gamma - 1)
    out = Fraction(1)
    for l in range(i):
        out *= gamma + l
    return out


def factorial(k: int) -> Fraction:
    return pochhammer(1, k)


@lru_cache(maxsize=1024)
def factorize(k: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, nu), ...) by trial division."""
    if k < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    p = 2
    while p * p <= k:
        nu = 0
        while k % p == 0:
            k //= p
            nu += 1
        if nu:
            out.append((p, nu))
        p += 1 if p == 2 else 2
    if k > 1:
        out.append((k, 1))
    return tuple(out)


def euler_phi(k: int) -> int:
    # prod q^(nu-1) (q-1) over the prime divisors q of k
    if k < 1:
        raise ValueError("euler_phi expects k >= 1")
    out = 1
    for q, nu in factorize(k):
        out *= q ** (nu - 1) * (q - 1)
    return out


def divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def squarefree_split(k: int) -> tuple[int, int]:
    """Write a positive integer as f**2 * d with d squarefree; return (f, d)."""
    f, d = 1, 1
    for p, nu in factorize(k):
        f *= p ** (nu // 2)
        d *= p ** (nu % 2)
    return f, d
