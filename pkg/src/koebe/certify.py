"""Positivity certificates for R'_N on the open interval (-1, 1).

Four routes, each returning a :class:`CertificationReport`:

* Sturm root counting on the float polynomial,
* adaptive bisection with interval Horner / mean-value enclosures,
* the shifted-cubic discriminant test (degree 3, the N = 5 shape),
* the shifted-quartic square completion (degree 4, the N = 6 shape).

The last three run on interval enclosures of the exact coefficients when
given them (``r_prime_poly_iv``); plain floats are treated as exact.
:func:`certify_univalence` runs every applicable route and demands agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence, Union

import numpy as np

from . import _ivarray as ivarray
from . import _polyops
from .boundary import r_prime_poly, r_prime_poly_iv
from .interval import Interval
from .polyfamilies import RealPolynomial, _require_positive

OPEN_ENDPOINT_EPS = 1e-9
STURM_PRUNE = 1e-12
STURM_NOISE_CEILING = 1e-9
DEFAULT_MAX_DEPTH = 40
# power-basis wrapping doubles the leaves needed every two degrees (N = 35 needs ~3e5)
MAX_LEAVES = 1_000_000
EXPLORATORY_ABOVE = 6

Coeffs = Union[RealPolynomial, Sequence[Interval], Sequence[float]]


class Verdict(str, Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    DEGENERATE = "Degenerate"
    INCONCLUSIVE = "Inconclusive"


class Method(str, Enum):
    STURM = "sturm"
    INTERVAL_BISECTION = "interval_bisection"
    DISCRIMINANT_SHIFT = "discriminant_shift"
    SQUARE_COMPLETION = "square_completion"
    COMBINED = "combined"


class DegeneratePolynomial(ValueError):
    """Raised for the identically-zero polynomial."""


class AmbiguousSturmChain(ArithmeticError):
    """Raised when a Sturm remainder or sign sits inside the rounding-noise band."""


@dataclass
class CertificationReport:
    verdict: Verdict
    method: Method
    margin: float | None = None
    detail: dict = field(default_factory=dict)
    exploratory: bool = False
    note: str = ""
    components: list["CertificationReport"] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def as_dict(self) -> dict:
        out = {
            "verdict": self.verdict.value,
            "method": self.method.value,
            "margin": self.margin,
            "exploratory": self.exploratory,
            "note": self.note,
            "detail": self.detail,
        }
        if self.components:
            out["components"] = [c.as_dict() for c in self.components]
        return out


def _iv_list(p: Coeffs) -> list[Interval]:
    coeffs = p.coeffs if isinstance(p, RealPolynomial) else p
    out = [Interval.point(c) for c in coeffs]
    while out and out[-1].lo == 0.0 and out[-1].hi == 0.0:
        out.pop()
    return out


def _mid_poly(p: Coeffs) -> RealPolynomial:
    if isinstance(p, RealPolynomial):
        return p
    return RealPolynomial([Interval.point(c).mid for c in p])


def _iv_pair(x: Interval) -> list[float]:
    return [x.lo, x.hi]


# -- Sturm -------------------------------------------------------------------


def _normalize(c: np.ndarray) -> np.ndarray:
    return c / np.max(np.abs(c))


def _poly_rem(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Remainder of num / den; arrays are highest-degree-first."""
    num = num.astype(float).copy()
    n, d = len(num), len(den)
    for i in range(n - d + 1):
        q = num[i] / den[0]
        num[i : i + d] -= q * den
        num[i] = 0.0
    return num[n - d + 1 :] if d > 1 else np.zeros(1)


def _trim_leading(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[nz[0] :] if len(nz) else c[:0]


def sturm_chain(p: RealPolynomial) -> list[np.ndarray]:
    """Signed remainder chain of (p, p'), each member scaled to unit max-norm.

    Positive rescaling keeps the sign pattern, hence the root count. Remainder
    coefficients below STURM_PRUNE are treated as zero; a remainder whose size
    lands between STURM_PRUNE and STURM_NOISE_CEILING cannot be classified and
    raises :class:`AmbiguousSturmChain`.
    """
    if p.is_zero():
        raise DegeneratePolynomial("Sturm sequence of the zero polynomial")
    chain = [_normalize(np.array(p.coeffs[::-1]))]
    if p.degree == 0:
        return chain
    chain.append(_normalize(np.array(p.derivative().coeffs[::-1])))
    while len(chain[-1]) > 1:
        rem = -_poly_rem(chain[-2], chain[-1])
        rem[np.abs(rem) < STURM_PRUNE] = 0.0
        rem = _trim_leading(rem)
        if not len(rem):
            break
        size = np.max(np.abs(rem))
        if size < STURM_NOISE_CEILING:
            raise AmbiguousSturmChain(f"remainder of size {size:.3g} inside the noise band")
        chain.append(_normalize(rem))
    return chain


def _sign_changes(chain: list[np.ndarray], x: float) -> int:
    signs = []
    for k, c in enumerate(chain):
        value = np.polyval(c, x)
        noise = 64 * np.finfo(float).eps * np.polyval(np.abs(c), abs(x)) * len(c)
        if abs(value) <= noise:
            if k == len(chain) - 1:
                raise AmbiguousSturmChain(f"last chain member vanishes to rounding at x={x!r}")
            signs.append(0)
        else:
            signs.append(1 if value > 0 else -1)
    for k in range(1, len(signs) - 1):
        if signs[k] == 0 and (signs[k - 1] == 0 or signs[k - 1] == signs[k + 1]):
            raise AmbiguousSturmChain(f"ambiguous sign pattern at x={x!r}")
    nonzero = [s for s in signs if s]
    return sum(1 for u, v in zip(nonzero, nonzero[1:]) if u != v)


def sturm_count(p: RealPolynomial, a: float, b: float) -> int:
    """Number of distinct real roots of p in (a, b]."""
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    chain = sturm_chain(p)
    # endpoints that are roots are nudged inward
    if p(a) == 0.0:
        a = a + 1e-12
    if p(b) == 0.0:
        b = b - 1e-12
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def _open_interval(a: float, b: float) -> tuple[float, float]:
    if not a < b:
        raise ValueError(f"need a < b, got a={a!r}, b={b!r}")
    eps = min(OPEN_ENDPOINT_EPS, (b - a) / 4)
    return a + eps, b - eps


def certify_positive_sturm(p: RealPolynomial, a: float = -1.0, b: float = 1.0) -> CertificationReport:
    """Certify p > 0 on (a, b) by Sturm counting on [a + eps, b - eps]."""
    method = Method.STURM
    if p.is_zero():
        return CertificationReport(Verdict.DEGENERATE, method, note="identically zero polynomial")
    lo, hi = _open_interval(a, b)
    grid = np.linspace(lo, hi, 1001)
    values = np.polyval(np.array(p.coeffs[::-1]), grid)
    margin = float(np.min(values))
    detail = {
        "interval": [lo, hi],
        "endpoint_values": {"a": float(p(a)), "b": float(p(b))},
        "grid_min_at": float(grid[int(np.argmin(values))]),
    }
    try:
        count = sturm_count(p, lo, hi)
    except AmbiguousSturmChain as exc:
        detail["reason"] = str(exc)
        return CertificationReport(Verdict.INCONCLUSIVE, method, margin, detail)
    detail["root_count"] = count
    mid_value = float(p(0.5 * (lo + hi)))
    if count == 0 and mid_value > 0 and margin > 0:
        return CertificationReport(Verdict.CERTIFIED, method, margin, detail)
    if count > 0 or mid_value <= 0 or margin <= 0:
        return CertificationReport(Verdict.REFUTED, method, margin, detail)
    return CertificationReport(Verdict.INCONCLUSIVE, method, margin, detail)


# -- interval bisection ---------------------------------------------------------


def _enclose(coeffs: list[Interval], deriv: list[Interval], lo: np.ndarray, hi: np.ndarray) -> ivarray.Pair:
    """Horner enclosure on each box, intersected with the mean-value form."""
    box = (lo, hi)
    direct = ivarray.horner(coeffs, box)
    if not deriv:
        return direct
    mid = 0.5 * lo + 0.5 * hi
    m = (mid, mid)
    mean_value = ivarray.add(ivarray.horner(coeffs, m), ivarray.mul(ivarray.horner(deriv, box), ivarray.sub(box, m)))
    return ivarray.intersect(direct, mean_value)


def certify_positive_bisection(
    p: Coeffs,
    a: float = -1.0,
    b: float = 1.0,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_leaves: int = MAX_LEAVES,
) -> CertificationReport:
    """Certify p > 0 on (a, b) by adaptive bisection with interval enclosures.

    Positivity is required on [a + eps, b - eps]; the values at a and b are
    only reported. ``p`` may carry Interval coefficients. All boxes of one
    depth are processed together.
    """
    method = Method.INTERVAL_BISECTION
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    coeffs = _iv_list(p)
    if not coeffs:
        return CertificationReport(Verdict.DEGENERATE, method, note="identically zero polynomial")
    deriv = _polyops.derivative(coeffs)
    lo, hi = _open_interval(a, b)
    end_a = _polyops.horner(coeffs, Interval.point(a))
    end_b = _polyops.horner(coeffs, Interval.point(b))
    detail = {
        "interval": [lo, hi],
        "endpoint_values": {"a": _iv_pair(end_a), "b": _iv_pair(end_b)},
    }
    for x in (lo, hi):
        v = _polyops.horner(coeffs, Interval.point(x))
        if v.hi <= 0.0:
            detail["witness"] = {"x": x, "value": _iv_pair(v)}
            return CertificationReport(Verdict.REFUTED, method, v.hi, detail)

    x0, x1 = np.array([lo]), np.array([hi])
    margin = math.inf
    leaves = 0
    depth = 0
    while x0.size:
        enc_lo, _ = _enclose(coeffs, deriv, x0, x1)
        done = enc_lo > 0.0
        if done.any():
            leaves += int(done.sum())
            margin = min(margin, float(enc_lo[done].min()))
        x0, x1 = x0[~done], x1[~done]
        if not x0.size:
            break
        xm = 0.5 * x0 + 0.5 * x1
        vm_lo, vm_hi = ivarray.horner(coeffs, (xm, xm))
        refuting = np.flatnonzero(vm_hi <= 0.0)
        if refuting.size:
            k = refuting[0]
            detail.update(witness={"x": float(xm[k]), "value": [float(vm_lo[k]), float(vm_hi[k])]}, leaves=leaves)
            return CertificationReport(Verdict.REFUTED, method, float(vm_hi[k]), detail)
        stuck = np.flatnonzero(~(vm_lo > 0.0))
        if stuck.size:
            # rounding alone straddles zero at a single point; splitting cannot help
            k = stuck[0]
            detail.update(stuck_at=[float(x0[k]), float(x1[k])], leaves=leaves, depth=depth, reason="precision exhausted")
            return CertificationReport(Verdict.INCONCLUSIVE, method, None, detail)
        if depth >= max_depth or leaves + 2 * x0.size > max_leaves or not np.all((x0 < xm) & (xm < x1)):
            detail.update(
                stuck_at=[float(x0[0]), float(x1[0])], leaves=leaves, depth=depth, reason="subdivision budget exhausted"
            )
            return CertificationReport(Verdict.INCONCLUSIVE, method, None, detail)
        x0, x1 = np.concatenate([x0, xm]), np.concatenate([xm, x1])
        order = np.argsort(x0, kind="stable")
        x0, x1 = x0[order], x1[order]
        depth += 1
    detail.update(leaves=leaves, max_depth_reached=depth)
    return CertificationReport(Verdict.CERTIFIED, method, margin, detail)


# -- hand certificates for the shifted cubic and quartic --------------------------


def quadratic_discriminant(p: Coeffs) -> float:
    """b^2 - 4ac of a degree-2 polynomial c + b x + a x^2."""
    q = _mid_poly(p)
    if q.degree != 2:
        raise ValueError(f"expected a quadratic, got degree {q.degree}")
    c, b, a = q.coeffs
    return b * b - 4 * a * c


def shifted_coefficients(p: Coeffs, center: float = -1.0) -> list[Interval]:
    """Interval enclosures of the coefficients of p(center + u)."""
    return _polyops.taylor_shift(_iv_list(p), Interval.point(center))


def _status(flag_true: bool, flag_false: bool) -> str:
    return "holds" if flag_true else ("fails" if flag_false else "straddles")


def certify_shift_discriminant(p: Coeffs) -> CertificationReport:
    """Cubic test: p(-1 + u) = A0 + u (A1 + A2 u + A3 u^2) with A0 >= 0, A1 > 0,
    A3 > 0 and A2^2 - 4 A1 A3 < 0 is positive for u in (0, 2]."""
    method = Method.DISCRIMINANT_SHIFT
    coeffs = _iv_list(p)
    if len(coeffs) - 1 != 3:
        raise ValueError(f"discriminant-shift certificate needs degree 3, got {len(coeffs) - 1}")
    A = shifted_coefficients(coeffs)
    disc = A[2].square() - 4 * A[1] * A[3]
    checks = {
        "A0 >= 0": _status(A[0].lo >= 0, A[0].hi < 0),
        "A1 > 0": _status(A[1].lo > 0, A[1].hi <= 0),
        "A3 > 0": _status(A[3].lo > 0, A[3].hi <= 0),
        "A2^2 - 4 A1 A3 < 0": _status(disc.hi < 0, disc.lo >= 0),
    }
    detail = {
        "A": [_iv_pair(x) for x in A],
        "discriminant": _iv_pair(disc),
        "checks": checks,
    }
    if all(v == "holds" for v in checks.values()):
        return CertificationReport(Verdict.CERTIFIED, method, A[0].lo, detail)
    return CertificationReport(Verdict.INCONCLUSIVE, method, None, detail)


def certify_square_completion(p: Coeffs) -> CertificationReport:
    """Quartic test: with p(-1 + u) = B0 + B1 u + ... + B4 u^4 and B0 > 0,

        p = (sqrt(B0) + B1 / (2 sqrt(B0)) u)^2 + u^2 q(u),
        q(u) = (B2 - B1^2 / (4 B0)) + B3 u + B4 u^2,

    and p > 0 on u in [0, 2] once q is shown positive there.
    """
    method = Method.SQUARE_COMPLETION
    coeffs = _iv_list(p)
    if len(coeffs) - 1 != 4:
        raise ValueError(f"square-completion certificate needs degree 4, got {len(coeffs) - 1}")
    B = shifted_coefficients(coeffs)
    detail: dict = {"B": [_iv_pair(x) for x in B]}
    if not B[0].is_positive():
        detail["checks"] = {"B0 > 0": _status(False, B[0].hi <= 0)}
        return CertificationReport(Verdict.INCONCLUSIVE, method, None, detail)

    root = B[0].sqrt()
    slope = B[1] / (2 * root)
    C0 = B[2] - B[1].square() / (4 * B[0])
    q = [C0, B[3], B[4]]
    q_disc = B[3].square() - 4 * B[4] * C0

    # expand back: (root + slope u)^2 + u^2 q(u)
    rebuilt = [root.square(), 2 * root * slope, slope.square() + C0, B[3], B[4]]
    rebuild_error = max(abs(r.mid - b.mid) for r, b in zip(rebuilt, B))

    by_discriminant = B[4].is_positive() and q_disc.is_negative()
    by_signs = all(c.is_nonnegative() for c in q) and any(c.is_positive() for c in q)
    checks = {
        "B0 > 0": "holds",
        "q > 0 on [0, 2]": "holds" if (by_discriminant or by_signs) else "undecided",
        "rebuild matches": "holds" if all(r.overlaps(b) for r, b in zip(rebuilt, B)) else "fails",
    }
    detail.update(
        square_root_term=_iv_pair(root),
        square_slope_term=_iv_pair(slope),
        q=[_iv_pair(c) for c in q],
        q_discriminant=_iv_pair(q_disc),
        q_route="discriminant" if by_discriminant else ("nonnegative coefficients" if by_signs else None),
        rebuild_error=rebuild_error,
        checks=checks,
    )
    if all(v == "holds" for v in checks.values()):
        # both summands are >= 0 on [0, 2]; strictness comes from q > 0 for u > 0 and B0 > 0 at u = 0
        return CertificationReport(Verdict.CERTIFIED, method, 0.0, detail)
    return CertificationReport(Verdict.INCONCLUSIVE, method, None, detail)


# -- dispatcher -------------------------------------------------------------------


def _combine(reports: list[CertificationReport]) -> Verdict:
    verdicts = {r.verdict for r in reports}
    if verdicts == {Verdict.CERTIFIED}:
        return Verdict.CERTIFIED
    if Verdict.CERTIFIED in verdicts and Verdict.REFUTED in verdicts:
        return Verdict.INCONCLUSIVE
    if Verdict.REFUTED in verdicts:
        return Verdict.REFUTED
    return Verdict.INCONCLUSIVE


def certify_univalence(N: int, max_depth: int = DEFAULT_MAX_DEPTH) -> CertificationReport:
    """Check R'_N > 0 on (-1, 1) by every applicable route; all must agree."""
    _require_positive("N", N)
    exploratory = N > EXPLORATORY_ABOVE
    if N == 1:
        return CertificationReport(
            Verdict.DEGENERATE,
            Method.COMBINED,
            detail={"N": 1},
            note="R'_1 is identically zero; P_1(z) = z is trivially univalent",
        )
    p = r_prime_poly(N)
    p_iv = r_prime_poly_iv(N)
    components = [
        certify_positive_sturm(p, -1.0, 1.0),
        certify_positive_bisection(p_iv, -1.0, 1.0, max_depth=max_depth),
    ]
    scaled = [4 * c for c in p_iv]
    if N == 5:
        components.append(certify_shift_discriminant(scaled))
    elif N == 6:
        components.append(certify_square_completion(scaled))
    verdict = _combine(components)
    margins = [c.margin for c in components if c.method is Method.INTERVAL_BISECTION]
    note = ""
    if exploratory:
        note = "exploratory: N > 6 has no hand certificate here; a numerical verdict, not a proof"
    if verdict is Verdict.INCONCLUSIVE and {c.verdict for c in components} >= {Verdict.CERTIFIED, Verdict.REFUTED}:
        note = (note + "; " if note else "") + "methods disagree"
    return CertificationReport(
        verdict,
        Method.COMBINED,
        margin=margins[0] if verdict is Verdict.CERTIFIED else None,
        detail={"N": N, "methods": [c.method.value for c in components]},
        exploratory=exploratory,
        note=note,
        components=components,
    )
