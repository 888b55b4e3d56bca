"""Chebyshev polynomials T_k, U_k and U'_k by three-term recurrence.

The recurrences are written once and run unchanged on floats or on
:class:`~koebe.interval.Interval` values, which is how the ``*_iv`` variants
get their enclosures.
"""

from __future__ import annotations

from .interval import Interval, cos_pi_frac, sin_pi_frac

__all__ = [
    "Interval",
    "cheb_t",
    "cheb_u",
    "cheb_u_prime",
    "cheb_t_iv",
    "cheb_u_iv",
    "cheb_u_prime_iv",
    "cos_pi_frac",
    "sin_pi_frac",
]


def _check_order(k):
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"Chebyshev order must be a nonnegative integer, got {k!r}")


def _t(k, x, one):
    t_prev, t_cur = one, x
    if k == 0:
        return t_prev
    for _ in range(k - 1):
        t_prev, t_cur = t_cur, 2 * x * t_cur - t_prev
    return t_cur


def _u_and_prime(k, x, one, zero):
    # joint recursion: U'_{k+1} = 2 U_k + 2x U'_k - U'_{k-1}
    u_prev, u_cur = one, 2 * x
    d_prev, d_cur = zero, 2 * one
    if k == 0:
        return u_prev, d_prev
    for _ in range(k - 1):
        u_prev, u_cur, d_prev, d_cur = (
            u_cur,
            2 * x * u_cur - u_prev,
            d_cur,
            2 * u_cur + 2 * x * d_cur - d_prev,
        )
    return u_cur, d_cur


def cheb_t(k: int, x: float) -> float:
    """T_k(x), first kind."""
    _check_order(k)
    return _t(k, float(x), 1.0)


def cheb_u(k: int, x: float) -> float:
    """U_k(x), second kind."""
    _check_order(k)
    return _u_and_prime(k, float(x), 1.0, 0.0)[0]


def cheb_u_prime(k: int, x: float) -> float:
    """Derivative U'_k(x)."""
    _check_order(k)
    return _u_and_prime(k, float(x), 1.0, 0.0)[1]


def cheb_u_and_prime(k: int, x: float) -> tuple[float, float]:
    _check_order(k)
    return _u_and_prime(k, float(x), 1.0, 0.0)


def cheb_t_iv(k: int, x: Interval) -> Interval:
    _check_order(k)
    return _t(k, Interval.point(x), Interval.point(1))


def cheb_u_iv(k: int, x: Interval) -> Interval:
    _check_order(k)
    return _u_and_prime(k, Interval.point(x), Interval.point(1), Interval.point(0))[0]


def cheb_u_prime_iv(k: int, x: Interval) -> Interval:
    _check_order(k)
    return _u_and_prime(k, Interval.point(x), Interval.point(1), Interval.point(0))[1]


def cheb_u_and_prime_iv(k: int, x: Interval) -> tuple[Interval, Interval]:
    _check_order(k)
    return _u_and_prime(k, Interval.point(x), Interval.point(1), Interval.point(0))


def t_power_rows(max_degree: int) -> list[list[int]]:
    """Exact integer power-basis coefficients of T_0 .. T_max_degree.

    Row d holds T_d(x) = sum_i rows[d][i] x^i. Fine up to degree ~60 in
    floating use; beyond that the alternating magnitudes (~2^d) swamp binary64.
    """
    rows = [[1]]
    if max_degree >= 1:
        rows.append([0, 1])
    for d in range(2, max_degree + 1):
        prev, prev2 = rows[d - 1], rows[d - 2]
        row = [0] + [2 * c for c in prev]
        for i, c in enumerate(prev2):
            row[i] -= c
        rows.append(row)
    return rows
