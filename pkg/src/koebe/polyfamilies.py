"""The two extremal univalent families: DSS polynomials P_N and Suffridge S_{n,j}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import mpmath

from . import _polyops
from .cheb import _u_and_prime
from .interval import Interval, from_mp_interval, mp_interval_precision


@dataclass(frozen=True)
class RealPolynomial:
    """Real polynomial in the power basis; ``coeffs[d]`` multiplies z**d.

    Trailing (highest-order) exact zeros are trimmed, so the zero polynomial
    has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        cs = [float(c) for c in self.coeffs]
        if not all(math.isfinite(c) for c in cs):
            raise ValueError("polynomial coefficients must be finite")
        while cs and cs[-1] == 0.0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        return _polyops.horner(self.coeffs, x)

    def derivative(self) -> "RealPolynomial":
        return RealPolynomial(_polyops.derivative(self.coeffs))

    def scaled(self, factor: float) -> "RealPolynomial":
        return RealPolynomial([factor * c for c in self.coeffs])

    def padded(self, length: int) -> tuple[float, ...]:
        """Coefficient tuple zero-padded (never truncated) to ``length``."""
        return self.coeffs + (0.0,) * max(0, length - len(self.coeffs))


class FamilyKind(str, Enum):
    DSS = "dss"
    SUFFRIDGE = "suffridge"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    N: int | None = None
    n: int | None = None
    j: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", FamilyKind(self.kind))
        if self.kind is FamilyKind.DSS:
            _require_positive("N", self.N)
        else:
            _require_positive("n", self.n)
            if not isinstance(self.j, int) or not 1 <= self.j <= self.n:
                raise ValueError(f"Suffridge index j must satisfy 1 <= j <= n={self.n}, got {self.j!r}")

    @classmethod
    def dss(cls, N: int) -> "FamilySpec":
        return cls(FamilyKind.DSS, N=N)

    @classmethod
    def suffridge(cls, n: int, j: int = 1) -> "FamilySpec":
        return cls(FamilyKind.SUFFRIDGE, n=n, j=j)

    @property
    def degree(self) -> int:
        return self.N if self.kind is FamilyKind.DSS else self.n

    def label(self) -> str:
        if self.kind is FamilyKind.DSS:
            return f"P_{self.N}"
        return f"S_{self.n},{self.j}"

    def as_dict(self) -> dict:
        if self.kind is FamilyKind.DSS:
            return {"kind": "dss", "N": self.N}
        return {"kind": "suffridge", "n": self.n, "j": self.j}

    def polynomial(self) -> RealPolynomial:
        if self.kind is FamilyKind.DSS:
            return dss_coeffs(self.N)
        return suffridge_coeffs(self.n, self.j)


def _require_positive(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def dss_coeffs(N: int) -> RealPolynomial:
    """P_N with a_k = U'_{N-k+1}(c) U_{k-1}(c) / U'_N(c), c = cos(pi/(N+2)).

    The recurrences run with 113-bit mantissas and each coefficient is rounded
    once to binary64, so the output is correctly rounded and does not depend
    on the platform libm.
    """
    _require_positive("N", N)
    with mpmath.workprec(113):
        c = mpmath.cospi(mpmath.mpf(1) / (N + 2))
        one, zero = mpmath.mpf(1), mpmath.mpf(0)
        pairs = [_u_and_prime(k, c, one, zero) for k in range(N + 1)]
        coeffs = [0.0, 1.0]
        for k in range(2, N + 1):
            coeffs.append(float(pairs[N - k + 1][1] * pairs[k - 1][0] / pairs[N][1]))
    return RealPolynomial(coeffs)


def mp_interval_bits(N: int) -> int:
    """Working precision for interval runs at degree N.

    The U' recurrence widens enclosures by about log2(3) bits per step and the
    power-basis conversion of R_N cancels about N more; this leaves ~90 spare.
    """
    return 96 + 3 * N


def dss_coeffs_mp_interval(N: int, ctx) -> list:
    """P_N coefficients as mpmath intervals; call inside :func:`mp_interval_precision`."""
    _require_positive("N", N)
    c = ctx.cos(ctx.pi / (N + 2))
    one, zero = ctx.mpf(1), ctx.mpf(0)
    pairs = [_u_and_prime(k, c, one, zero) for k in range(N + 1)]
    coeffs = [zero, one]
    for k in range(2, N + 1):
        coeffs.append(pairs[N - k + 1][1] * pairs[k - 1][0] / pairs[N][1])
    return coeffs


def dss_coeffs_iv(N: int) -> list[Interval]:
    """Enclosures of the exact P_N coefficients (index = exponent), a few ulp wide."""
    _require_positive("N", N)
    with mp_interval_precision(mp_interval_bits(N)) as ctx:
        return [from_mp_interval(c) for c in dss_coeffs_mp_interval(N, ctx)]


def dss_coeffs_trig(N: int) -> RealPolynomial:
    """P_N from the sine form of its coefficients; independent of the U/U' route.

    The bare sine form has leading coefficient sin(pi/(N+2)); dividing by it
    restores the normalization a_1 = 1.
    """
    _require_positive("N", N)
    m = N + 2
    scale = 1.0 / (m * math.sin(2 * math.pi / m) * math.sin(math.pi / m))
    coeffs = [0.0]
    for k in range(1, N + 1):
        bracket = (N - k + 3) * math.sin((k + 1) * math.pi / m) - (N - k + 1) * math.sin(
            (k - 1) * math.pi / m
        )
        coeffs.append(scale * bracket * math.sin(k * math.pi / m))
    return RealPolynomial(coeffs)


def suffridge_coeffs(n: int, j: int = 1) -> RealPolynomial:
    FamilySpec.suffridge(n, j)
    denom = math.sin(math.pi * j / (n + 1))
    coeffs = [0.0]
    for k in range(1, n + 1):
        coeffs.append((1 - (k - 1) / n) * math.sin(math.pi * j * k / (n + 1)) / denom)
    coeffs[1] = 1.0
    return RealPolynomial(coeffs)


def eval_complex(p: RealPolynomial | Sequence[float], z: complex) -> complex:
    coeffs = p.coeffs if isinstance(p, RealPolynomial) else p
    return complex(_polyops.horner(coeffs, complex(z)))
