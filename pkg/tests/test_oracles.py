import math
from fractions import Fraction as F

import mpmath
import numpy as np
import pytest

from serinv import kernels
from serinv._pykernels import WG, WGK, XGK
from serinv.errors import DomainError
from serinv.oracles import (
    EXPINT,
    GAUSSIAN,
    GEXP,
    LAMBERT,
    ORACLES,
    POLYLOG32,
    SQRTSHIFT,
    evaluate_with_error,
    get_oracle,
    polylog_terms,
)
from serinv.series import Prefactor, evaluate

EULER_GAMMA = 0.5772156649


def e1_continued_fraction(x, eps=1e-16, max_iter=100000):
    """E_1(x) by the modified Lentz algorithm on its continued fraction."""
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, max_iter):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < eps:
            return h * math.exp(-x)
    raise RuntimeError("continued fraction did not converge")


# -- series --------------------------------------------------------------------

def test_series_examples():
    g = GAUSSIAN.series(5)
    assert g.prefactor == Prefactor(F(1, 2), 1)
    assert g.coeffs == (1, F(-3, 4), F(105, 32), F(-3465, 128), F(675675, 2048), F(-43648605, 8192))
    assert EXPINT.series(4).coeffs == (1, -1, 2, -6, 24)
    assert LAMBERT.series(3).coeffs == (0, 1, 1, F(3, 2))
    assert SQRTSHIFT.series(2).coeffs == (1, F(1, 2), F(-1, 8))
    assert GEXP.series(4).coeffs == (0, 1, -1, F(1, 2), F(-1, 6))


def test_gaussian_coefficients_match_gamma_ratio():
    # E_n = (-1)^n Gamma(2n+1/2) / (Gamma(1/2) n!), times sqrt(pi)/2
    cs = GAUSSIAN.series(12).coeffs
    for n, c in enumerate(cs):
        ref = (-1) ** n * mpmath.gamma(2 * n + 0.5) / (mpmath.gamma(0.5) * mpmath.factorial(n))
        assert float(c) == pytest.approx(float(ref), rel=1e-14)


def test_polylog_series_exactness():
    s = POLYLOG32.series(16)
    assert not s.exact
    assert s.coeffs[1] == 1 and s.coeffs[4] == F(1, 8) and s.coeffs[9] == F(1, 27)
    for n in (2, 3, 7, 15):
        assert abs(float(s.coeffs[n]) - n ** -1.5) < 1e-16
        with mpmath.workdps(60):
            ref = F(mpmath.nstr(mpmath.mpf(n) ** -1.5, 55))
        assert abs(s.coeffs[n] - ref) < F(1, 10 ** 39)


def test_names_and_lookup():
    assert set(ORACLES) == {"gaussian", "polylog32", "expint", "lambert", "sqrtshift", "gexp"}
    assert get_oracle("polylog32") is POLYLOG32
    with pytest.raises(KeyError):
        get_oracle("bessel")


# -- point values ----------------------------------------------------------------

def test_gaussian_values():
    assert GAUSSIAN(0.1) == pytest.approx(0.8370429277, abs=1e-10)
    assert GAUSSIAN(10000) == pytest.approx(0.09033502245, abs=1e-8)
    assert GAUSSIAN(0) == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-12)


def test_polylog_values():
    assert POLYLOG32(0.9) == pytest.approx(1.614438529, abs=1e-9)
    assert POLYLOG32(0.999999) == pytest.approx(2.608831900, abs=1e-9)


def test_lambert_branch_point():
    assert LAMBERT(math.exp(-1)) == pytest.approx(1.0, abs=2e-5)


@pytest.mark.parametrize("g", [0.001, 0.1, 1.0, 10.0, 1000.0])
def test_gaussian_against_mpmath(g):
    ref = mpmath.quad(lambda x: mpmath.exp(-x * x - g * x ** 4), [0, 1, 3, mpmath.inf])
    assert GAUSSIAN(g) == pytest.approx(float(ref), abs=1e-11)


@pytest.mark.parametrize("z", [0.1, 0.5, 0.9, 0.99, 0.9999])
def test_polylog_against_mpmath(z):
    assert POLYLOG32(z) == pytest.approx(float(mpmath.polylog(1.5, z)), abs=1e-11)


@pytest.mark.parametrize("g", [0.01, 0.3, 5.0])
def test_expint_against_mpmath(g):
    ref = mpmath.exp(1 / mpmath.mpf(g)) * mpmath.e1(1 / mpmath.mpf(g)) / g
    assert EXPINT(g) == pytest.approx(float(ref), abs=1e-11)


@pytest.mark.parametrize("g", [0.5, 1.0, 2.0])
def test_expint_against_continued_fraction(g):
    x = 1 / g
    ref = math.exp(x) * e1_continued_fraction(x) / g
    assert EXPINT(g) == pytest.approx(ref, abs=1e-9)


@pytest.mark.parametrize("g", [0.01, 0.2, 0.36])
def test_lambert_against_mpmath(g):
    assert LAMBERT(g) == pytest.approx(float(-mpmath.lambertw(-g)), abs=1e-9)


def test_closed_forms():
    assert SQRTSHIFT(3.0) == 2.0
    assert GEXP(0.3) == pytest.approx(0.3 * math.exp(-0.3))


def test_expint_large_g_asymptotics():
    g = 100.0
    approx = (math.log(g) - EULER_GAMMA) / g + (math.log(g) - EULER_GAMMA + 1) / g ** 2
    assert EXPINT(g) == pytest.approx(approx, rel=0.02)


def test_domain_errors():
    for o, g in ((GAUSSIAN, -1), (POLYLOG32, 1.0), (EXPINT, -0.1), (LAMBERT, 0.5), (SQRTSHIFT, -2)):
        with pytest.raises(DomainError):
            o(g)
    with pytest.raises(DomainError):
        GAUSSIAN(math.nan)


def test_error_estimates_within_tolerance():
    for o, g in ((GAUSSIAN, 1.0), (EXPINT, 1.0), (POLYLOG32, 0.99), (LAMBERT, 0.2)):
        v = evaluate_with_error(o, g, 1e-11)
        assert v.error <= 1e-11


# -- properties -------------------------------------------------------------------

@pytest.mark.parametrize("o", [GAUSSIAN, POLYLOG32, EXPINT, LAMBERT, SQRTSHIFT, GEXP],
                         ids=lambda o: o.name)
def test_series_value_consistency(o):
    s = o.series(6)
    g = 0.01
    partial = evaluate(s.truncate(5), g)
    omitted = abs(float(s.coeffs[6]) * s.prefactor.value * g ** 6)
    assert abs(o(g) - partial) <= 2 * omitted


@pytest.mark.parametrize("o,g", [(GAUSSIAN, 0.5), (GAUSSIAN, 100.0), (EXPINT, 0.5), (EXPINT, 50.0)])
def test_quadrature_halving_tolerance(o, g):
    tol = 1e-8
    assert abs(o(g, tol) - o(g, tol / 2)) < tol


def test_polylog_more_terms():
    z = 0.9
    n = polylog_terms(z, 1.5, 1e-11)
    assert abs(POLYLOG32(z) - kernels.polylog_sum(z, 1.5, 10 * n)) < 1e-10


def test_gauss_kronrod_constants():
    x7, w7 = np.polynomial.legendre.leggauss(7)
    gauss_nodes = sorted([XGK[1], XGK[3], XGK[5], 0.0, -XGK[1], -XGK[3], -XGK[5]])
    assert np.allclose(sorted(x7), gauss_nodes, atol=1e-15)
    w = dict(zip(np.round(x7, 12), w7))
    for node, weight in zip((XGK[1], XGK[3], XGK[5], XGK[7]), WG):
        assert weight == pytest.approx(w[round(node, 12)], abs=1e-15)
    # the 15-point Kronrod rule integrates x^k exactly for k <= 22
    nodes = list(XGK) + [-x for x in XGK[:7]]
    weights = list(WGK) + list(WGK[:7])
    for k in range(0, 23, 2):
        q = sum(wi * xi ** k for wi, xi in zip(weights, nodes))
        assert q == pytest.approx(2 / (k + 1), abs=1e-14)
