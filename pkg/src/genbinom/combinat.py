"""Exact factorials, binomials and Stirling numbers of the first kind.

Integers are Python ints and rationals are :class:`fractions.Fraction`,
so everything here is exact.
"""

from __future__ import annotations

import threading
from math import comb, factorial, prod

__all__ = [
    "rising_factorial",
    "falling_factorial",
    "binom_int",
    "compositions",
    "stirling_signed",
    "stirling_unsigned",
]


def rising_factorial(a: int, n: int) -> int:
    """a (a+1) ... (a+n-1); 1 when n == 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return prod(range(a, a + n))


def falling_factorial(a: int, n: int) -> int:
    """a (a-1) ... (a-n+1); 1 when n == 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return prod(range(a, a - n, -1))


def binom_int(a: int, n: int) -> int:
    """Binomial coefficient [a]_n / n! for any integer ``a``; 0 when n < 0."""
    if n < 0:
        return 0
    if a >= 0:
        return comb(a, n)
    return falling_factorial(a, n) // factorial(n)


def compositions(total: int, parts: int) -> int:
    """Number of compositions of ``total`` into ``parts`` positive parts.

    This is C(total-1, parts-1) read as the coefficient of y^total in
    (y/(1-y))^parts, so ``compositions(0, 0) == 1`` where ``binom_int(-1, -1)``
    would give 0.  Sums of the form sum_i C(i-1, j-1) ... need this reading
    at their boundary terms.
    """
    if parts == 0:
        return 1 if total == 0 else 0
    if parts < 0 or total < parts:
        return 0
    return comb(total - 1, parts - 1)


# Row n holds s(n, 0..n).  Rows are only ever appended, under the lock.
_stirling_rows: list[list[int]] = [[1]]
_stirling_lock = threading.Lock()


def _stirling_row(n: int) -> list[int]:
    if n < len(_stirling_rows):
        return _stirling_rows[n]
    with _stirling_lock:
        while len(_stirling_rows) <= n:
            m = len(_stirling_rows) - 1
            prev = _stirling_rows[m]
            row = [0] * (m + 2)
            # s(m+1, k) = s(m, k-1) - m s(m, k)
            for k in range(m + 2):
                left = prev[k - 1] if k >= 1 else 0
                here = prev[k] if k <= m else 0
                row[k] = left - m * here
            _stirling_rows.append(row)
    return _stirling_rows[n]


def stirling_signed(n: int, k: int) -> int:
    """s(n, k), the coefficient of X^k in X(X-1)...(X-n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return _stirling_row(n)[k]


def stirling_unsigned(n: int, k: int) -> int:
    """|s(n, k)|, the coefficient of X^k in X(X+1)...(X+n-1)."""
    return abs(stirling_signed(n, k))
