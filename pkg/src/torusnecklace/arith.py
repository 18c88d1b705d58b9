"""Integer helpers: gcd decomposition, modular inverses, residues and Bezout pairs."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ParamDecomposition:
    n: int
    m: int
    d: int
    n_prime: int
    m_prime: int
    q: int
    r: int
    r_prime: int


def decompose(n: int, m: int) -> ParamDecomposition:
    """Split ``(n, m)`` into gcd, reduced parts and the euclidean division ``m = q*n + r``."""
    if n < 1 or m < 1:
        raise ValueError(f"parameters must be positive, got n={n}, m={m}")
    d = math.gcd(n, m)
    q, r = divmod(m, n)
    return ParamDecomposition(n, m, d, n // d, m // d, q, r, r // d)


def mod_inverse(n: int, m: int) -> int:
    """Inverse of ``n`` modulo ``m`` taken in ``{1, ..., m-1}``; 1 when ``m == 1``."""
    if n < 1 or m < 1:
        raise ValueError(f"parameters must be positive, got n={n}, m={m}")
    if math.gcd(n, m) != 1:
        raise ValueError(f"{n} and {m} are not coprime")
    if m == 1:
        return 1
    return pow(n, -1, m)


def residue(a: int, b: int) -> int:
    """Representative of ``a`` modulo ``b`` in ``{1, ..., b}``."""
    if b < 1:
        raise ValueError(f"modulus must be positive, got {b}")
    return (a - 1) % b + 1


def bezout_pair(n_prime: int, m_prime: int) -> tuple[int, int]:
    """Return ``(x, y)`` with ``x*k + y*(m' - k) == 1`` where ``k = mod_inverse(n', m')``.

    Among all solutions the one with the smallest nonzero ``|x|`` is returned, preferring
    ``x > 0`` on ties.
    """
    k = mod_inverse(n_prime, m_prime)
    a, b = k, m_prime - k
    if b == 0:
        # m' == 1 forces k == 1: x*1 + y*0 == 1
        return 1, 0
    # the solution set is x = x0 + t*b, y = y0 - t*a
    g, x0, y0 = _ext_gcd(a, b)
    if g != 1:
        raise ValueError(f"{a} and {b} are not coprime")
    base = x0 % b
    candidates = [v for v in (base, base - b, base + b) if v != 0]
    x = min(candidates, key=lambda v: (abs(v), v < 0))
    y = (1 - x * a) // b
    assert x * a + y * b == 1
    return x, y


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return old_r, old_s, old_t
