"""Coefficient-list kernels shared by the float and interval paths.

Coefficient lists are in the power basis, index = exponent. Every routine
uses only +, -, * so it works for floats, ints, complex and Intervals alike.
"""

from __future__ import annotations

from typing import Sequence


def horner(coeffs: Sequence, x):
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def derivative(coeffs: Sequence) -> list:
    return [k * coeffs[k] for k in range(1, len(coeffs))]


def taylor_shift(coeffs: Sequence, center) -> list:
    """Coefficients of q(u) = p(center + u) via repeated synthetic division."""
    q = list(coeffs)
    n = len(q)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            q[k] = q[k] + center * q[k + 1]
    return q


def autocorrelation(a: Sequence) -> list:
    """c_d = sum_k a_k a_{k+d} for d = 0 .. len(a)-1."""
    n = len(a)
    out = []
    for d in range(n):
        terms = [a[k] * a[k + d] for k in range(n - d)]
        acc = terms[0]
        for term in terms[1:]:
            acc = acc + term
        out.append(acc)
    return out
