import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from serinv.errors import DegeneratePadeTable, InsufficientOrder, NearPole
from serinv.oracles import GAUSSIAN
from serinv.pade import (
    Polynomial,
    build_pade,
    canonical_form,
    derivative,
    eval_pade,
    eval_pade_exact,
    poly_gcd,
    real_roots,
    render_canonical,
    sign_variations,
    sturm_sequence,
)
from serinv.series import Prefactor, normalize_to_rho, series

RHO = normalize_to_rho(GAUSSIAN.series(5))


def test_direct_two_three_canonical():
    cf = canonical_form(build_pade(GAUSSIAN.series(5), 2, 3))
    assert (cf.constant, cf.pi_half_power, cf.shift) == (2, 1, 0)
    assert cf.numerator == (1163200, 28532448, 115460139)
    assert cf.denominator == (4652800, 117619392, 534788100, 141105195)


def test_inverse_two_three_render():
    text = render_canonical(build_pade(RHO, 2, 3))
    assert text == ("16*rho*(15640 + 219707*rho)/"
                    "(250240 + 2420512*rho - 11137140*rho^2 + 26152805*rho^3)")


def test_inverse_three_two_canonical():
    cf = canonical_form(build_pade(RHO, 3, 2))
    assert (cf.constant, cf.shift) == (1, 1)
    assert cf.numerator == (15904, 318204, 747223)
    assert cf.denominator == (15904, 248624, -375297)


def test_constant_series():
    p = build_pade(series([F(7, 3)]), 0, 0)
    assert p.numerator.coeffs == (F(7, 3),) and p.denominator.coeffs == (1,)


def test_denominator_normalized_and_prefactor_carried():
    p = build_pade(GAUSSIAN.series(5), 2, 3)
    assert p.denominator.coeffs[0] == 1
    assert p.prefactor == Prefactor(F(1, 2), 1)


def test_eval_examples():
    p = build_pade(GAUSSIAN.series(5), 2, 3)
    assert eval_pade(p, 0.1) == pytest.approx(0.836884189, abs=1e-9)
    assert eval_pade(p, 0) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-15)
    assert eval_pade_exact(p, 0) == Prefactor(F(1, 2), 1)
    q = build_pade(RHO, 2, 3)
    assert eval_pade(q, 0.07419851329) == pytest.approx(0.1, abs=1e-9)


def test_near_pole():
    p = build_pade(series([1, 1, 1]), 0, 1)  # 1/(1 - x)
    with pytest.raises(NearPole):
        eval_pade(p, 1.0)
    with pytest.raises(NearPole):
        eval_pade_exact(p, 1)


def test_errors():
    with pytest.raises(InsufficientOrder):
        build_pade(series([1, 2, 3]), 2, 1)
    # [1/1] of 1 + x^2 needs 0*q_1 = -1: a blocked entry
    with pytest.raises(DegeneratePadeTable):
        build_pade(series([1, 0, 1]), 1, 1)


def test_derivative_roots():
    d = derivative(build_pade(RHO, 2, 3))
    r = real_roots(d.numerator, 0, 2)
    assert r[0].refined == pytest.approx(0.360, abs=5e-4)
    assert derivative(build_pade(series([5]), 0, 0)).numerator.is_zero()
    partial = Polynomial(RHO.coeffs).derivative()
    assert real_roots(partial, 0, 1)[0].refined == pytest.approx(0.1659, abs=5e-5)


def test_real_roots_examples():
    r = real_roots(Polynomial((-1, 0, 1)), -2, 2)
    assert [b.refined for b in r] == pytest.approx([-1, 1])
    den = build_pade(RHO, 3, 2).denominator
    assert real_roots(den, 0, 10)[0].refined == pytest.approx(0.721, abs=5e-4)


def test_real_roots_open_interval_and_multiplicity():
    p = Polynomial((-1, 0, 1)) * Polynomial((-1, 0, 1))  # (x^2 - 1)^2
    assert len(real_roots(p, -1, 1)) == 0
    assert len(real_roots(p, -2, 2)) == 2


def test_root_certificates():
    p = Polynomial((F(-1, 3), 0, 0, 1)) * Polynomial((2, -3, 1))
    seq = sturm_sequence(p)
    for b in real_roots(p, -5, 5, 1e-10):
        assert b.high - b.low < F(1, 10 ** 10)
        assert p(b.low) * p(b.high) < 0 or \
            sign_variations(seq, b.low) - sign_variations(seq, b.high) == 1


def test_poly_gcd():
    a = Polynomial((-1, 1)) * Polynomial((2, 1))
    b = Polynomial((-1, 1)) * Polynomial((3, 0, 1))
    assert poly_gcd(a, b).coeffs == (-1, 1)


# -- properties -----------------------------------------------------------------

def rationals(max_num=30, max_den=9):
    return st.builds(F, st.integers(-max_num, max_num), st.integers(1, max_den))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_order_matching(L, M, data):
    cs = data.draw(st.lists(rationals(), min_size=L + M + 1, max_size=L + M + 1))
    assume(cs[0] != 0)
    src = series(cs)
    try:
        p = build_pade(src, L, M)
    except DegeneratePadeTable:
        assume(False)
    assert p.denominator.coeffs[0] == 1
    assert p.numerator.degree <= L and p.denominator.degree <= M
    assert p.series_expansion(L + M).coeffs == src.coeffs


def test_sturm_against_known_factorizations():
    rng = random.Random(20240611)
    for _ in range(100):
        k = rng.randint(1, 6)
        roots = set()
        while len(roots) < k:
            roots.add(F(rng.randint(-40, 40), rng.randint(1, 7)))
        p = Polynomial((rng.choice((-3, -1, 2, 5)),))
        for r in roots:
            p = p * Polynomial((-r, 1))
        if rng.random() < 0.3:
            p = p * Polynomial((1, 0, 1))  # no real roots
        found = real_roots(p, -50, 50, 1e-9)
        assert len(found) == k
        for b, r in zip(found, sorted(roots)):
            assert b.low <= r <= b.high
            assert abs(b.refined - float(r)) < 1e-9


@settings(max_examples=50, deadline=None)
@given(st.lists(rationals(), min_size=4, max_size=4).filter(lambda c: c[0] != 0),
       st.floats(-0.3, 0.3))
def test_derivative_matches_finite_difference(cs, x):
    try:
        p = build_pade(series(cs), 1, 2)
    except DegeneratePadeTable:
        assume(False)
    h = 1e-5
    try:
        fd = (eval_pade(p, x + h) - eval_pade(p, x - h)) / (2 * h)
        an = eval_pade(derivative(p), x)
    except NearPole:
        assume(False)
    assume(abs(p.denominator(x)) > 0.2)
    assert an == pytest.approx(fd, rel=1e-6, abs=1e-6)
