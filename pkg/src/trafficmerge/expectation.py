"""Exact expected right-lane lengths.

All values are :class:`fractions.Fraction` (always reduced, positive
denominator) or plain ints.  Floats only appear where a caller asks for a
decimal rendering.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .counting import binomial
from .errors import DomainError

__all__ = [
    "expected_length",
    "expected_length_k",
    "expected_length_k_complement",
    "limit_ratio",
    "ratio_trace",
    "right_lane_sum",
    "right_lane_sum_k",
    "closed_form_case",
]

KRule = Union[str, Fraction, tuple[int, int]]


def expected_length(length: int) -> Fraction:
    """Mean final right-lane length over all ``2**length`` arrival sequences."""
    if length < 0:
        raise DomainError(f"length must be nonnegative, got {length}")
    if length == 0:
        return Fraction(0)
    if length % 2:
        half = (length - 1) // 2
        return Fraction(length * (2 ** (length - 1) + math.comb(length - 1, half)), 2**length)
    return Fraction(length * (2**length + math.comb(length, length // 2)), 2 ** (length + 1))


def right_lane_sum(length: int) -> int:
    """Total right-lane length summed over every sequence of the given length."""
    total = expected_length(length) * 2**length
    assert total.denominator == 1
    return total.numerator


def _check_lk(length: int, k: int) -> None:
    if length < 0:
        raise DomainError(f"length must be nonnegative, got {length}")
    if not 0 <= k <= length:
        raise DomainError(f"need 0 <= k <= length, got k={k}, length={length}")


def closed_form_case(length: int, k: int) -> int:
    """Which of the three closed forms covers ``(length, k)``.

    1: ``length >= 2k + 1`` and odd.  2: ``length >= 2k`` and even.
    3: ``length < 2k``.
    """
    _check_lk(length, k)
    if length < 2 * k:
        return 3
    return 1 if length % 2 else 2


def _lane_sum_k(length: int, k: int) -> Fraction:
    case = closed_form_case(length, k)
    total = binomial(length, k)
    if case == 1:
        # terms C(length, k-2i-2) for i = 0 .. k/2 - 1; negative lower index is 0
        tail = sum(binomial(length, j) for j in range(k - 2, -1, -2))
        return Fraction(length + 1, 2) * total + tail
    if case == 2:
        tail = sum(binomial(length, j) for j in range(k - 1, -1, -2))
        return Fraction(length, 2) * total + tail
    tail = sum(binomial(length, j) for j in range(k + 1, length + 1, 2))
    return Fraction(k * total + tail)


def right_lane_sum_k(length: int, k: int) -> int:
    value = _lane_sum_k(length, k)
    assert value.denominator == 1
    return value.numerator


def expected_length_k(length: int, k: int) -> Fraction:
    """Mean right-lane length over sequences of ``length`` cars with ``k`` zeros."""
    return _lane_sum_k(length, k) / Fraction(binomial(length, k))


def expected_length_k_complement(length: int, k: int) -> Fraction:
    """Third case rewritten with ``k' = length - k``; needs ``length > 2k'``."""
    _check_lk(length, k)
    kp = length - k
    if not length > 2 * kp:
        raise DomainError(f"complement form needs length > 2(length - k), got length={length}, k={k}")
    total = binomial(length, k)
    tail = sum(binomial(length, j) for j in range(kp - 1, -1, -2))
    return (k * total + tail) / Fraction(total)


def _parse_rule(k_rule: KRule) -> tuple[int, int] | None:
    if isinstance(k_rule, str):
        if k_rule == "all":
            return None
        num, sep, den = k_rule.partition("/")
        if not sep:
            raise DomainError(f"k rule must be 'all' or 'b/a', got {k_rule!r}")
        try:
            b, a = int(num), int(den)
        except ValueError:
            raise DomainError(f"k rule must be 'all' or 'b/a' with integers, got {k_rule!r}") from None
    elif isinstance(k_rule, Fraction):
        b, a = k_rule.numerator, k_rule.denominator
    else:
        b, a = k_rule
    if a <= 0 or b <= 0:
        raise DomainError(f"ratio b/a needs positive integers, got {b}/{a}")
    if b > a:
        raise DomainError(f"ratio b/a must not exceed 1, got {b}/{a}")
    return b, a


def limit_ratio(k_rule: KRule) -> Fraction:
    """Limit of ``E/length`` as length grows under the given rule."""
    rule = _parse_rule(k_rule)
    if rule is None:
        return Fraction(1, 2)
    b, a = rule
    return Fraction(1, 2) if a >= 2 * b else Fraction(b, a)


def ratio_trace(max_length: int, k_rule: KRule = "all") -> list[tuple[int, Fraction]]:
    """Exact ``E/length`` along ``length = a, 2a, ... <= max_length``.

    ``k_rule`` is ``"all"`` (every sequence, ``a = 1``) or a ratio ``b/a``
    given as ``"b/a"``, a Fraction, or a ``(b, a)`` tuple, in which case
    ``k = b * length / a``.  A Fraction is kept in lowest terms, so pass a
    tuple to step with a non-reduced ``a``.
    """
    if max_length < 1:
        raise DomainError(f"max_length must be at least 1, got {max_length}")
    rule = _parse_rule(k_rule)
    out = []
    if rule is None:
        for length in range(1, max_length + 1):
            out.append((length, expected_length(length) / length))
        return out
    b, a = rule
    for r in range(1, max_length // a + 1):
        length = a * r
        out.append((length, expected_length_k(length, b * r) / length))
    return out
