"""Koebe radii: closed form for P_N, circle minima, and the family comparison table."""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .polyfamilies import FamilyKind, FamilySpec, RealPolynomial, _require_positive, eval_complex

DEFAULT_GRID = 4096
MIN_GRID = 64
REFINED_GRID = 16384
ARGMIN_AT_PI_TOL = 1e-6
TIE_TOL = 1e-9
IMAG_NOISE = 1e-12

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class RadiusReport:
    family: FamilySpec | None
    radius: float
    argmin_t: float
    at_minus_one: bool
    formula_value: float | None = None

    def as_dict(self) -> dict:
        return {
            "family": self.family.as_dict() if self.family else None,
            "radius": self.radius,
            "argmin_t": self.argmin_t,
            "at_minus_one": self.at_minus_one,
            "formula_value": self.formula_value,
        }


def koebe_radius_formula(N: int) -> float:
    """(1/4) sec^2(pi/(N+2)) = |P_N(-1)| = sqrt(R_N(-1)), correctly rounded."""
    _require_positive("N", N)
    with mpmath.workprec(113):
        return float(mpmath.mpf(1) / (4 * mpmath.cospi(mpmath.mpf(1) / (N + 2)) ** 2))


def suffridge_value_at_minus_one(n: int) -> float:
    """|S_{n,1}(-1)| = (1/4) ((n+1)/n) sec^2(pi/(2(n+1)))."""
    _require_positive("n", n)
    return 0.25 * (n + 1) / n / math.cos(math.pi / (2 * (n + 1))) ** 2


def _circle_values(coeffs: np.ndarray, t: np.ndarray) -> np.ndarray:
    return np.polynomial.polynomial.polyval(np.exp(1j * t), coeffs)


def golden_section(f, a: float, b: float, tol: float = 1e-12) -> float:
    """Minimizer of a unimodal f on [a, b] to within tol."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def min_modulus_on_circle(
    p: RealPolynomial, grid: int = DEFAULT_GRID, family: FamilySpec | None = None
) -> RadiusReport:
    """min |p(e^{it})| over t in [0, pi]; real coefficients make [pi, 2pi] a mirror image."""
    if grid < MIN_GRID:
        raise ValueError(f"grid must be >= {MIN_GRID}, got {grid}")
    coeffs = np.asarray(p.coeffs, dtype=float)
    ts = np.linspace(0.0, math.pi, grid + 1)
    sq = np.abs(_circle_values(coeffs, ts)) ** 2
    i = int(np.argmin(sq))
    lo, hi = ts[max(i - 1, 0)], ts[min(i + 1, grid)]

    def sq_mod(t: float) -> float:
        return abs(eval_complex(p, complex(math.cos(t), math.sin(t)))) ** 2

    t_star = golden_section(sq_mod, lo, hi)
    # golden section never evaluates the bracket ends; t = 0, pi are often the answer
    candidates = [(sq_mod(t_star), t_star), (sq_mod(lo), lo), (sq_mod(hi), hi)]
    best_sq, best_t = min(candidates)
    formula = None
    if family is not None and family.kind is FamilyKind.DSS:
        formula = koebe_radius_formula(family.N)
    return RadiusReport(
        family=family,
        radius=math.sqrt(best_sq),
        argmin_t=float(best_t),
        at_minus_one=bool(abs(best_t - math.pi) < ARGMIN_AT_PI_TOL),
        formula_value=formula,
    )


def _bisect_root(f, a: float, b: float, fa: float, tol: float = 1e-12) -> float:
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def _touch_point(p: RealPolynomial, imag, a: float, b: float) -> float:
    """Locate an even-order zero of Im p(e^{it}) inside [a, b].

    |Im| is flat there, so golden section only reaches ~sqrt(eps); the
    t-derivative Re(e^{it} p'(e^{it})) has a simple zero and bisects cleanly.
    """
    dp = p.derivative()

    def slope(t: float) -> float:
        z = complex(math.cos(t), math.sin(t))
        return (z * eval_complex(dp, z)).real

    fa, fb = slope(a), slope(b)
    if fa != 0.0 and fb != 0.0 and (fa > 0) != (fb > 0):
        return _bisect_root(slope, a, b, fa)
    return golden_section(lambda u: abs(imag(u)), a, b)


def _crossings(p: RealPolynomial, grid: int) -> tuple[list[float], list[float]]:
    coeffs = np.asarray(p.coeffs, dtype=float)
    ts = np.linspace(0.0, math.pi, grid + 1)
    im = _circle_values(coeffs, ts).imag
    # samples this small carry no reliable sign
    noise = IMAG_NOISE * (float(np.sum(np.abs(coeffs))) or 1.0)
    signs = np.where(np.abs(im) <= noise, 0, np.sign(im)).astype(int)

    def imag(t: float) -> float:
        return eval_complex(p, complex(math.cos(t), math.sin(t))).imag

    transversal = [0.0, math.pi]
    last = None
    for k in range(1, grid):
        if signs[k] == 0:
            continue
        if last is not None and signs[k] != signs[last]:
            transversal.append(_bisect_root(imag, float(ts[last]), float(ts[k]), float(im[last])))
        last = k

    # even-order touches: local minima of |Im| that refine down to the noise floor
    # while the clear signs on either side agree
    mag = np.abs(im)
    tangential: list[float] = []
    for k in range(2, grid - 1):
        if not (mag[k] <= mag[k - 1] and mag[k] <= mag[k + 1]):
            continue
        left = signs[k - 1 :: -1][np.flatnonzero(signs[k - 1 :: -1])[:1]]
        right = signs[k + 1 :][np.flatnonzero(signs[k + 1 :])[:1]]
        if len(left) and len(right) and left[0] != right[0]:
            continue
        t = _touch_point(p, imag, float(ts[k - 1]), float(ts[k + 1]))
        if abs(imag(t)) <= noise and not any(abs(t - u) < 1e-6 for u in tangential):
            tangential.append(t)
    return transversal, tangential


def real_axis_crossings(p: RealPolynomial, grid: int = DEFAULT_GRID) -> tuple[list[float], list[float]]:
    """Angles t in [0, pi] where p(e^{it}) meets the real axis.

    Returns (transversal, tangential): sign changes of Im p(e^{it}) (t = 0 and
    t = pi always included) and even-order touches where Im p vanishes without
    changing sign. Any touch triggers a rerun on the finer grid, in case it is
    really a pair of close sign changes.
    """
    transversal, tangential = _crossings(p, grid)
    if tangential and grid < REFINED_GRID:
        transversal, tangential = _crossings(p, REFINED_GRID)
    return transversal, tangential


def real_axis_min(p: RealPolynomial, grid: int = DEFAULT_GRID, include_tangential: bool = False) -> float:
    """Smallest Re p(e^{it}) over the t in [0, pi] where p(e^{it}) crosses the real axis."""
    transversal, tangential = real_axis_crossings(p, grid)
    ts = transversal + tangential if include_tangential else transversal
    return min(eval_complex(p, complex(math.cos(t), math.sin(t))).real for t in ts)


@dataclass(frozen=True)
class ComparisonRow:
    N: int
    dss_radius: float
    suffridge_at_minus_one: float
    suffridge_circle_min: float
    dimitrov_winner: str
    exploratory: bool

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "dss_radius": self.dss_radius,
            "suffridge_at_minus_one": self.suffridge_at_minus_one,
            "suffridge_circle_min": self.suffridge_circle_min,
            "dimitrov_winner": self.dimitrov_winner,
            "exploratory": self.exploratory,
        }


COMPARISON_COLUMNS = (
    "N",
    "dss_radius",
    "suffridge_at_minus_one",
    "suffridge_circle_min",
    "dimitrov_winner",
    "exploratory",
)


def comparison_row(N: int, grid: int = DEFAULT_GRID) -> ComparisonRow:
    spec = FamilySpec.suffridge(N, 1)
    s = spec.polynomial()
    dss = koebe_radius_formula(N)
    circle = min_modulus_on_circle(s, grid, spec).radius
    if abs(dss - circle) <= TIE_TOL:
        winner = "tie"
    else:
        winner = "suffridge" if circle > dss else "dss"
    return ComparisonRow(
        N=N,
        dss_radius=dss,
        suffridge_at_minus_one=abs(eval_complex(s, -1.0)),
        suffridge_circle_min=circle,
        dimitrov_winner=winner,
        exploratory=N > 6,
    )


def comparison_table(N_max: int, grid: int = DEFAULT_GRID) -> list[ComparisonRow]:
    """Rows for N = 2 .. N_max comparing the larger minimum modulus of P_N and S_{N,1}."""
    if not isinstance(N_max, int) or N_max < 2:
        raise ValueError(f"N_max must be an integer >= 2, got {N_max!r}")
    return [comparison_row(N, grid) for N in range(2, N_max + 1)]
