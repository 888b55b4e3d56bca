"""Extremal univalent polynomials: DSS and Suffridge families, boundary
closed forms, positivity certificates for R'_N, and Koebe radii."""

__version__ = "0.1.0"

from .interval import Interval
from .cheb import cheb_t, cheb_u, cheb_u_prime
from .polyfamilies import FamilySpec, RealPolynomial, dss_coeffs, dss_coeffs_trig, eval_complex, suffridge_coeffs
from .boundary import closed_form_sq_modulus, closed_form_value, r_poly, r_poly_via_closed_form, r_prime_poly, taylor_shift
from .certify import CertificationReport, Method, Verdict, certify_univalence
from .radii import RadiusReport, comparison_table, koebe_radius_formula, min_modulus_on_circle, real_axis_min

__all__ = [
    "Interval",
    "cheb_t",
    "cheb_u",
    "cheb_u_prime",
    "FamilySpec",
    "RealPolynomial",
    "dss_coeffs",
    "dss_coeffs_trig",
    "eval_complex",
    "suffridge_coeffs",
    "closed_form_sq_modulus",
    "closed_form_value",
    "r_poly",
    "r_poly_via_closed_form",
    "r_prime_poly",
    "taylor_shift",
    "CertificationReport",
    "Method",
    "Verdict",
    "certify_univalence",
    "RadiusReport",
    "comparison_table",
    "koebe_radius_formula",
    "min_modulus_on_circle",
    "real_axis_min",
]
