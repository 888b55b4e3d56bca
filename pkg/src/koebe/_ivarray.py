"""Vectorized interval arithmetic on (lo, hi) ndarray pairs.

Every operation rounds to nearest and then steps one ulp outward, which
encloses the exact result as long as nothing overflows. Coarser than
:class:`koebe.interval.Interval` (no exactness tracking) but evaluates
thousands of boxes per numpy call.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .interval import Interval

Pair = tuple[np.ndarray, np.ndarray]


def _out(lo: np.ndarray, hi: np.ndarray) -> Pair:
    return np.nextafter(lo, -np.inf), np.nextafter(hi, np.inf)


def add(a: Pair, b: Pair) -> Pair:
    return _out(a[0] + b[0], a[1] + b[1])


def sub(a: Pair, b: Pair) -> Pair:
    return _out(a[0] - b[1], a[1] - b[0])


def mul(a: Pair, b: Pair) -> Pair:
    p = np.stack([a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]])
    return _out(p.min(axis=0), p.max(axis=0))


def horner(coeffs: Sequence[Interval], x: Pair) -> Pair:
    """Interval Horner evaluation of sum c_k x^k at every box in x."""
    shape = np.shape(x[0])
    acc = (np.full(shape, coeffs[-1].lo), np.full(shape, coeffs[-1].hi))
    for c in reversed(coeffs[:-1]):
        acc = add(mul(acc, x), (np.full(shape, c.lo), np.full(shape, c.hi)))
    return acc


def intersect(a: Pair, b: Pair) -> Pair:
    # both enclose the same exact range, so the overlap is never empty
    return np.maximum(a[0], b[0]), np.minimum(a[1], b[1])
