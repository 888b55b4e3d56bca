"""Boundary values of P_N on the unit circle and the squared-modulus polynomial R_N.

R_N(x) is |P_N(e^{it})|^2 written as a polynomial in x = cos t. It is built
from the coefficient autocorrelation of P_N (exact up to rounding); the
rational Chebyshev closed form is kept as a sampled, independent oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import chebyshev as npcheb

from . import _polyops
from .cheb import cheb_t, cheb_u, t_power_rows
from .interval import Interval, from_mp_interval, mp_interval_precision
from .polyfamilies import (
    RealPolynomial,
    _require_positive,
    dss_coeffs,
    dss_coeffs_mp_interval,
    eval_complex,
    mp_interval_bits,
)

# the closed forms add terms of size 1/(t - pole)^2 that cancel to O(1); within
# this radius of t = 2pi/(N+2) the loss exceeds 1e-9 for N <= 12, so Horner is used
SINGULARITY_RADIUS = 2e-3
INTERPOLATION_RESIDUAL_TOL = 1e-8


class InterpolationError(RuntimeError):
    pass


@dataclass(frozen=True)
class BoundaryPoint:
    t: float
    value: complex
    sq_modulus: float


def _check_t(t: float):
    if not 0.0 < t < math.pi:
        raise ValueError(f"t must lie in the open interval (0, pi), got {t!r}")


def _one_minus_cos(t: float) -> float:
    return 2.0 * math.sin(0.5 * t) ** 2


def _near_pole(N: int, t: float) -> bool:
    return abs(t - 2 * math.pi / (N + 2)) < SINGULARITY_RADIUS


def closed_form_value(N: int, t: float) -> complex:
    """P_N(e^{it}) from the closed trigonometric form, for t in (0, pi)."""
    _require_positive("N", N)
    _check_t(t)
    if _near_pole(N, t):
        return eval_complex(dss_coeffs(N), cmath.exp(1j * t))
    m = N + 2
    b = math.cos(2 * math.pi / m)
    ct = math.cos(t)
    d = ct - b
    amplitude = (1 - b) / (m * _one_minus_cos(t)) * math.sin(t) * math.sin(m * t / 2) / (d * d)
    return 1 / (2 * d) + amplitude * cmath.exp(0.5j * m * t)


def closed_form_sq_modulus(N: int, t: float) -> float:
    """|P_N(e^{it})|^2 from the two-square closed form, for t in (0, pi)."""
    _require_positive("N", N)
    _check_t(t)
    if _near_pole(N, t):
        return abs(eval_complex(dss_coeffs(N), cmath.exp(1j * t))) ** 2
    m = N + 2
    b = math.cos(2 * math.pi / m)
    ct = math.cos(t)
    d = ct - b
    half = m * t / 2
    first = math.cos(half) / d + 2 / m * (1 - b) / _one_minus_cos(t) * math.sin(t) / (d * d) * math.sin(half)
    second = math.sin(half) / d
    return (first * first + second * second) / 4


def boundary_point(N: int, t: float) -> BoundaryPoint:
    value = closed_form_value(N, t)
    return BoundaryPoint(t=t, value=value, sq_modulus=closed_form_sq_modulus(N, t))


def modulus_squared_coeffs(a: Sequence) -> list:
    """Power-basis coefficients (in x = cos t) of |sum a_k e^{ikt}|^2.

    Works on floats or Intervals. Uses |p|^2 = c_0 + sum_d 2 c_d T_d(cos t)
    with c_d the autocorrelation of the coefficient list.
    """
    c = _polyops.autocorrelation(list(a))
    if not c:
        return []
    rows = t_power_rows(len(c) - 1)
    out = [0 * c[0] for _ in range(len(c))]
    out[0] = out[0] + c[0]
    for d in range(1, len(c)):
        weight = 2 * c[d]
        for i, tcoef in enumerate(rows[d]):
            if tcoef:
                out[i] = out[i] + tcoef * weight
    return out


def modulus_squared_poly(p: RealPolynomial) -> RealPolynomial:
    return RealPolynomial(modulus_squared_coeffs(p.coeffs))


def r_poly(N: int) -> RealPolynomial:
    """R_N(x) = |P_N(e^{it})|^2, x = cos t; degree N - 1."""
    _require_positive("N", N)
    return RealPolynomial(modulus_squared_coeffs(dss_coeffs(N).coeffs[1:]))


def r_poly_iv(N: int) -> list[Interval]:
    """Interval enclosures of the exact coefficients of R_N."""
    return _r_iv(N, derivative=False)


def r_prime_poly(N: int) -> RealPolynomial:
    return r_poly(N).derivative()


def r_prime_poly_iv(N: int) -> list[Interval]:
    return _r_iv(N, derivative=True)


def _r_iv(N: int, derivative: bool) -> list[Interval]:
    # everything runs in high-precision interval arithmetic; one outward rounding at the end
    _require_positive("N", N)
    with mp_interval_precision(mp_interval_bits(N)) as ctx:
        coeffs = modulus_squared_coeffs(dss_coeffs_mp_interval(N, ctx)[1:])
        if derivative:
            coeffs = _polyops.derivative(coeffs)
        return [from_mp_interval(c) for c in coeffs]


def r_closed_form(N: int, x: float) -> float:
    """R_N(x) from its rational expression in T_{N+2}, U_{N+1}; singular at x = b and x = 1."""
    m = N + 2
    b = math.cos(2 * math.pi / m)
    d = x - b
    four_r = (
        1 / d**2
        + 2 * (1 - b) * (1 + x) * cheb_u(N + 1, x) / (m * d**3)
        + 2 * (1 - b) ** 2 * (1 + x) * (1 - cheb_t(N + 2, x)) / (m**2 * d**4 * (1 - x))
    )
    return four_r / 4


def interpolation_nodes(N: int) -> np.ndarray:
    """Chebyshev nodes of the first kind, kept a quarter spacing (in angle) off the pole.

    The rational form cancels like (x - b)^-4, so a node near b is pushed
    half a spacing away from it rather than nudged.
    """
    pole = 2 * math.pi / (N + 2)
    spacing = math.pi / N
    angles = (2 * np.arange(N) + 1) * spacing / 2
    for m, theta in enumerate(angles):
        moved = theta + math.copysign(spacing / 2, theta - pole)
        if abs(theta - pole) < spacing / 4 and 0.0 < moved < math.pi:
            angles[m] = moved
    return np.cos(angles)


def r_poly_via_closed_form(N: int) -> RealPolynomial:
    """R_N by interpolating the rational closed form at N Chebyshev nodes."""
    _require_positive("N", N)
    nodes = interpolation_nodes(N)
    values = np.array([r_closed_form(N, float(x)) for x in nodes])
    cheb_coeffs = npcheb.chebfit(nodes, values, N - 1)
    residual = float(np.max(np.abs(npcheb.chebval(nodes, cheb_coeffs) - values)))
    if residual > INTERPOLATION_RESIDUAL_TOL:
        raise InterpolationError(f"interpolation residual {residual:.3g} exceeds {INTERPOLATION_RESIDUAL_TOL}")
    return RealPolynomial(npcheb.cheb2poly(cheb_coeffs))


def taylor_shift(p: RealPolynomial, center: float) -> RealPolynomial:
    """q with q(u) = p(center + u)."""
    return RealPolynomial(_polyops.taylor_shift(p.coeffs, center))
