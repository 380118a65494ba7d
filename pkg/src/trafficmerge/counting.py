"""Exact counts of merging paths.

``M_n(m)`` counts merging paths ending at ``(n, m)``; ``M_{n,k}(m)`` counts
those whose arrival sequence has exactly ``k`` zeros.  Each count has a
recursive evaluator (total, zero outside the feasible region) and a closed
form (defined only inside the regions where it holds).  Python ints are
arbitrary precision, so nothing here overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BounceBounds",
    "binomial",
    "bounce_bounds",
    "m_count_closed",
    "m_count_k_closed",
    "m_count_k_recursive",
    "m_count_k_region",
    "m_count_recursive",
    "t_count",
]


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, taken to be 0 when ``b < 0`` or ``b > a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check_nonneg(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")


def m_count_recursive(n: int, m: int) -> int:
    """Merging paths to ``(n, m)`` via the four-branch recurrence."""
    _check_nonneg(n=n, m=m)
    if m < n:
        return 0
    # rows indexed by n, columns by m; table[x][y] = M_x(y)
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for y in range(m + 1):
        table[0][y] = 1 if y == 0 else 2
    for x in range(1, n + 1):
        for y in range(x, m + 1):
            if y == x:
                table[x][y] = table[x - 1][y]
            elif y == x + 1:
                table[x][y] = table[x - 1][y] + 2 * table[x][y - 1]
            else:
                table[x][y] = table[x - 1][y] + table[x][y - 1]
    return table[n][m]


def m_count_closed(n: int, m: int) -> int:
    """Folded Pascal triangle: ``2 C(m+n, n)`` off the diagonal, ``C(2n, n)`` on it."""
    _check_nonneg(n=n, m=m)
    if m < n:
        raise DomainError(f"closed form needs m >= n, got n={n}, m={m}")
    if m == n:
        return math.comb(2 * n, n)
    return 2 * math.comb(m + n, n)


def _base_k(m: int, k: int) -> int:
    # paths to (0, m) with k zeros: k zeros, optionally led by one bouncing 1
    if k == 0:
        return 1 if m in (0, 1) else 0
    return 1 if m in (k, k + 1) else 0


def m_count_k_recursive(n: int, m: int, k: int) -> int:
    """Merging paths to ``(n, m)`` with exactly ``k`` zeros, by recursion."""
    if min(n, m, k) < 0 or m < n or k > m:
        return 0
    # memo[x][y][z] = M_{x,z}(y); x ascending then y then z keeps every
    # dependency computed before it is read
    memo = [[[0] * (k + 1) for _ in range(m + 1)] for _ in range(n + 1)]
    for y in range(m + 1):
        for z in range(k + 1):
            memo[0][y][z] = _base_k(y, z)
    for x in range(1, n + 1):
        for y in range(x, m + 1):
            for z in range(k + 1):
                if y == x:
                    memo[x][y][z] = memo[x - 1][y][z]
                    continue
                fewer = memo[x][y - 1][z - 1] if z > 0 else 0
                if y == x + 1:
                    memo[x][y][z] = memo[x - 1][y][z] + fewer + memo[x][y - 1][z]
                else:
                    memo[x][y][z] = memo[x - 1][y][z] + fewer
    return memo[n][m][k]


def m_count_k_region(n: int, m: int, k: int) -> str | None:
    """Name the closed-form region containing ``(n, m, k)``, or ``None``.

    ``"general"``: m > k and m > n.  ``"diagonal"``: m = n >= k.
    ``"ballot"``: m = k >= n.  The point m = n = k lies in both of the last
    two; it is reported as ``"diagonal"`` and the two formulas agree there.
    """
    if min(n, m, k) < 0 or m < n:
        return None
    if m > k and m > n:
        return "general"
    if m == n and n >= k:
        return "diagonal"
    if m == k:
        return "ballot"
    return None


def m_count_k_closed(n: int, m: int, k: int) -> int:
    region = m_count_k_region(n, m, k)
    if region == "general":
        shift = n - (m - k)
        return binomial(m + n, shift + 1) - binomial(m + n, shift - 1)
    if region == "diagonal":
        return binomial(2 * n, k) - binomial(2 * n, k - 1)
    if region == "ballot":
        return binomial(k + n, n) - binomial(k + n, n - 1)
    raise DomainError(
        f"(n={n}, m={m}, k={k}) is outside every closed-form region: need m >= n >= 0 and "
        "one of (m > k and m > n), (m = n >= k), (m = k)"
    )


def t_count(length: int, bounces_at_least: int, k: int) -> int:
    """Size of the set of length-``length`` sequences with ``k`` zeros and at least
    ``bounces_at_least`` bounces, by the reflection bijection."""
    _check_nonneg(length=length, k=k)
    if k > length:
        raise DomainError(f"k={k} exceeds length={length}")
    m = k + bounces_at_least
    n = length - m
    if not m > k:
        raise DomainError(f"need at least one required bounce (m > k); got bounces_at_least={bounces_at_least}")
    if not m > n:
        raise DomainError(f"need m > n, got m={m}, n={n}")
    return binomial(m + n, n - (m - k) + 1)


@dataclass(frozen=True)
class BounceBounds:
    lo: int
    hi: int

    def __contains__(self, value: int) -> bool:
        return self.lo <= value <= self.hi


def bounce_bounds(length: int, k: int) -> BounceBounds:
    """Integer bounds on the bounce count of any sequence with ``k`` zeros."""
    _check_nonneg(length=length, k=k)
    if k > length:
        raise DomainError(f"k={k} exceeds length={length}")
    lo = max(0, -((2 * k - length) // 2))  # ceil((length - 2k) / 2)
    hi = (length - k + 1) // 2
    return BounceBounds(lo, hi)
