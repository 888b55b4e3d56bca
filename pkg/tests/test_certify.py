import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from koebe.boundary import r_prime_poly, r_prime_poly_iv, taylor_shift
from koebe.certify import (
    AmbiguousSturmChain,
    DegeneratePolynomial,
    Method,
    Verdict,
    certify_positive_bisection,
    certify_positive_sturm,
    certify_shift_discriminant,
    certify_square_completion,
    certify_univalence,
    quadratic_discriminant,
    shifted_coefficients,
    sturm_chain,
    sturm_count,
)
from koebe.interval import Interval
from koebe.polyfamilies import RealPolynomial

from conftest import SQRT2


def poly_from_roots(roots, lead=1.0):
    return RealPolynomial(list(np.polynomial.polynomial.polyfromroots(roots) * lead))


def test_quadratic_discriminant_of_4r4_prime():
    p = r_prime_poly(4).scaled(4)
    assert quadratic_discriminant(p) == pytest.approx(-3008 / 81, abs=1e-9)
    assert quadratic_discriminant(p) == pytest.approx(-37.1358, abs=1e-4)


def test_sturm_examples():
    assert sturm_count(RealPolynomial([-0.25, 0, 1]), -1, 1) == 2
    assert sturm_count(r_prime_poly(4).scaled(4), -1, 1) == 0
    assert sturm_count(r_prime_poly(5).scaled(4), -1, 1) == 0


def test_sturm_count_5_against_companion_roots():
    p = r_prime_poly(5).scaled(4)
    roots = np.roots(p.coeffs[::-1])
    real = sorted(r.real for r in roots if abs(r.imag) < 1e-9)
    assert len(real) == 1
    assert real[0] == pytest.approx(-1.0429, abs=1e-4)
    assert sturm_count(p, -2, 1) == 1


def test_sturm_rejects_zero_and_bad_interval():
    with pytest.raises(DegeneratePolynomial):
        sturm_chain(RealPolynomial([]))
    with pytest.raises(ValueError):
        sturm_count(RealPolynomial([1.0, 1.0]), 1, -1)


def test_sturm_endpoint_root_is_nudged():
    # roots at -1 and 0.5; -1 is the left endpoint and excluded from (a, b]
    assert sturm_count(poly_from_roots([-1.0, 0.5]), -1, 1) == 1


def test_ambiguous_chain_is_reported():
    # a near-double root puts a remainder inside the noise band
    p = poly_from_roots([0.3, 0.3 + 1e-5])
    with pytest.raises(AmbiguousSturmChain):
        sturm_count(p, -1, 1)
    assert certify_positive_sturm(p).verdict is Verdict.INCONCLUSIVE


@pytest.mark.parametrize("degree", [3, 4])
def test_sturm_on_constructed_roots(degree):
    rng = random.Random(7 + degree)
    for _ in range(250):
        n_real = rng.choice(range(degree % 2, degree + 1, 2))
        # well-separated real roots, some outside [-1, 1]
        real = []
        while len(real) < n_real:
            r = round(rng.uniform(-1.8, 1.8), 3)
            if all(abs(r - s) > 0.05 for s in real + [-1.0, 1.0]):
                real.append(r)
        pairs = [complex(rng.uniform(-1.5, 1.5), rng.uniform(0.2, 1.5)) for _ in range((degree - n_real) // 2)]
        roots = real + [z for c in pairs for z in (c, c.conjugate())]
        coeffs = np.real(np.polynomial.polynomial.polyfromroots(roots))
        p = RealPolynomial(list(coeffs * rng.choice([-2.0, 0.5, 3.0])))
        expected = sum(1 for r in real if -1 < r <= 1)
        assert sturm_count(p, -1, 1) == expected


def test_certify_sturm_examples():
    rep = certify_positive_sturm(RealPolynomial([1.0]))
    assert rep.verdict is Verdict.CERTIFIED and rep.margin == 1.0
    assert certify_positive_sturm(r_prime_poly(3)).certified
    assert certify_positive_sturm(r_prime_poly(1)).verdict is Verdict.DEGENERATE
    assert certify_positive_sturm(RealPolynomial([-0.25, 0, 1])).verdict is Verdict.REFUTED


def test_certify_bisection_examples():
    rep = certify_positive_bisection(RealPolynomial([1.0, 1.0]), -0.5, 1.0)
    assert rep.certified and rep.margin >= 0.5 - 1e-12
    assert certify_positive_bisection(r_prime_poly(6)).certified
    assert not certify_positive_bisection(RealPolynomial([0, 0, 1.0])).certified
    assert certify_positive_bisection(RealPolynomial([-1.0, 0, 1.0])).verdict is Verdict.REFUTED
    assert certify_positive_bisection(RealPolynomial([])).verdict is Verdict.DEGENERATE
    with pytest.raises(ValueError):
        certify_positive_bisection(RealPolynomial([1.0]), max_depth=0)


def test_bisection_depth_exhaustion_is_inconclusive():
    # positive but with a minimum of 1e-12 at 0.3: too thin for depth 5
    p = RealPolynomial([0.09 + 1e-12, -0.6, 1.0])
    rep = certify_positive_bisection(p, max_depth=5)
    assert rep.verdict is Verdict.INCONCLUSIVE
    assert rep.margin is None


def test_endpoint_zero_does_not_block_open_interval():
    # 1 + x vanishes at -1 only
    rep = certify_positive_bisection(RealPolynomial([1.0, 1.0]))
    assert rep.certified
    assert rep.detail["endpoint_values"]["a"][0] <= 0.0 <= rep.detail["endpoint_values"]["a"][1]
    assert certify_positive_sturm(RealPolynomial([1.0, 1.0])).certified


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=1, max_size=6), st.floats(0.05, 2.0))
def test_bisection_is_sound(coeffs, shift):
    # lift the polynomial to be positive at its sampled minimum and check the margin
    base = RealPolynomial(coeffs)
    xs = np.linspace(-1, 1, 2001)
    m = float(np.min(np.polyval(np.array(base.coeffs[::-1] or (0.0,)), xs)))
    p = RealPolynomial([coeffs[0] - m + shift] + list(coeffs[1:]))
    rep = certify_positive_bisection(p, max_depth=30)
    if rep.certified:
        scan = np.linspace(-1 + 1e-9, 1 - 1e-9, 10_000)
        assert float(np.min(np.polyval(np.array(p.coeffs[::-1]), scan))) >= rep.margin - 1e-9


@pytest.mark.parametrize("N", range(2, 13))
def test_bisection_margin_is_a_lower_bound(N):
    rep = certify_positive_bisection(r_prime_poly_iv(N))
    assert rep.certified
    p = r_prime_poly(N)
    scan = np.linspace(-1 + 1e-9, 1 - 1e-9, 10_000)
    assert float(np.min(np.polyval(np.array(p.coeffs[::-1]), scan))) >= rep.margin - 1e-9


def test_shift_discriminant_on_4r5_prime():
    p = [4 * c for c in r_prime_poly_iv(5)]
    rep = certify_shift_discriminant(p)
    assert rep.certified
    assert rep.detail["discriminant"][1] < 0
    A = taylor_shift(r_prime_poly(5).scaled(4), -1).coeffs
    for enc, plain in zip(rep.detail["A"], A):
        assert enc[0] - 1e-12 <= plain <= enc[1] + 1e-12
    assert A[0] >= 0 and A[1] > 0


def test_shift_discriminant_counterexample():
    # (x+1)^3 - (x+1): A = (0, -1, 0, 1)
    p = taylor_shift(RealPolynomial([0.0, -1.0, 0.0, 1.0]), 1.0)
    rep = certify_shift_discriminant(p)
    assert not rep.certified
    assert rep.detail["checks"]["A1 > 0"] == "fails"


def test_shift_discriminant_rejects_wrong_degree():
    with pytest.raises(ValueError):
        certify_shift_discriminant(RealPolynomial([1.0, 1.0]))


def test_square_completion_on_4r6_prime():
    p = [4 * c for c in r_prime_poly_iv(6)]
    rep = certify_square_completion(p)
    assert rep.certified
    assert rep.detail["q_route"] == "discriminant"
    assert rep.detail["rebuild_error"] < 1e-9
    golden = [108 - 76 * SQRT2, 464 * SQRT2 - 660, 1068 - 732 * SQRT2, 432 * SQRT2 - 680, 160 - 80 * SQRT2]
    for enc, value in zip(rep.detail["B"], golden):
        assert enc[0] - 1e-10 <= value <= enc[1] + 1e-10
    B = shifted_coefficients(p)
    assert [b.mid for b in B] == pytest.approx(golden, abs=1e-10)


def test_square_completion_trivial_case():
    # u^4 + 1 written in x = u - 1
    p = taylor_shift(RealPolynomial([1.0, 0, 0, 0, 1.0]), 1.0)
    rep = certify_square_completion(p)
    assert rep.certified
    assert rep.detail["q_route"] == "nonnegative coefficients"


def test_square_completion_needs_positive_b0():
    p = taylor_shift(RealPolynomial([0.0, 1.0, 0, 0, 1.0]), 1.0)
    assert not certify_square_completion(p).certified
    with pytest.raises(ValueError):
        certify_square_completion(RealPolynomial([1.0, 2.0, 1.0]))


def test_univalence_examples():
    rep1 = certify_univalence(1)
    assert rep1.verdict is Verdict.DEGENERATE and "trivially univalent" in rep1.note
    assert certify_univalence(2).certified
    rep5 = certify_univalence(5)
    assert rep5.certified
    assert {c.method for c in rep5.components} == {
        Method.STURM,
        Method.INTERVAL_BISECTION,
        Method.DISCRIMINANT_SHIFT,
    }
    assert all(c.certified for c in rep5.components)
    rep6 = certify_univalence(6)
    assert Method.SQUARE_COMPLETION in {c.method for c in rep6.components}
    rep7 = certify_univalence(7)
    assert rep7.exploratory and "exploratory" in rep7.note
    assert not rep6.exploratory


@pytest.mark.parametrize("N", range(2, 13))
def test_methods_agree(N):
    rep = certify_univalence(N)
    decided = {c.verdict for c in rep.components if c.verdict is not Verdict.INCONCLUSIVE}
    assert len(decided) <= 1
    assert rep.certified


def test_disagreement_is_inconclusive(monkeypatch):
    import koebe.certify as cert

    refuted = cert.CertificationReport(Verdict.REFUTED, Method.STURM)
    monkeypatch.setattr(cert, "certify_positive_sturm", lambda *a, **k: refuted)
    rep = cert.certify_univalence(4)
    assert rep.verdict is Verdict.INCONCLUSIVE
    assert "methods disagree" in rep.note


def test_report_as_dict_shape():
    d = certify_univalence(3).as_dict()
    assert d["verdict"] == "Certified" and d["method"] == "combined"
    assert {c["method"] for c in d["components"]} == {"sturm", "interval_bisection"}


def test_high_degree_reports_exhausted_precision():
    rep = certify_positive_bisection(r_prime_poly_iv(60))
    assert rep.verdict is Verdict.INCONCLUSIVE
    assert rep.detail["reason"] == "precision exhausted"


def test_small_leaf_budget_is_inconclusive():
    rep = certify_positive_bisection(r_prime_poly_iv(12), max_leaves=4)
    assert rep.verdict is Verdict.INCONCLUSIVE
    assert rep.detail["reason"] == "subdivision budget exhausted"


@pytest.mark.parametrize("N", [20, 30])
def test_bisection_reaches_beyond_published_range(N):
    assert certify_positive_bisection(r_prime_poly_iv(N)).certified
