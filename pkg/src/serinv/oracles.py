"""Reference functions: exact series coefficients and accurate point values.

=============  ==========================  ===================================
id             E(g)                        point evaluation
=============  ==========================  ===================================
gaussian       int_0^inf exp(-x^2-g x^4)   adaptive Gauss-Kronrod on [0, X]
polylog32      Li_{3/2}(g)                 direct sum with a tail bound
expint         int_0^inf e^-x/(1+g x)      adaptive Gauss-Kronrod on [0, X]
lambert        E with g = E exp(-E)        Newton iteration from E = g
sqrtshift      sqrt(1+g)                   closed form
gexp           g exp(-g)                   closed form
=============  ==========================  ===================================

Quadrature cut-offs ``X`` are chosen so the analytic tail bound is below
``tol/10``; the remaining budget goes to the quadrature error estimate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import ConvergenceFailure, DomainError, UnsupportedOrder
from .series import ONE, Prefactor, TruncatedSeries, as_rational

DEFAULT_TOL = 1e-11
MAX_ORDER = 64
POLYLOG_DIGITS = 40


class OracleValue(NamedTuple):
    value: float
    error: float


@dataclass(frozen=True)
class Oracle:
    kind: str
    s: Fraction | None = None
    tolerance: float = DEFAULT_TOL

    @property
    def name(self) -> str:
        if self.kind == "polylog":
            return "polylog" + format(self.s).replace("/", "")
        return self.kind

    def series(self, order: int) -> TruncatedSeries:
        return series_coefficients(self, order)

    def __call__(self, g: float, tol: float | None = None) -> float:
        return evaluate(self, g, tol)


GAUSSIAN = Oracle("gaussian")
POLYLOG32 = Oracle("polylog", Fraction(3, 2))
EXPINT = Oracle("expint")
LAMBERT = Oracle("lambert")
SQRTSHIFT = Oracle("sqrtshift")
GEXP = Oracle("gexp")

ORACLES = {o.name: o for o in (GAUSSIAN, POLYLOG32, EXPINT, LAMBERT, SQRTSHIFT, GEXP)}


def get_oracle(name: str) -> Oracle:
    try:
        return ORACLES[name]
    except KeyError:
        raise KeyError(f"unknown oracle {name!r}; choose from {', '.join(ORACLES)}") from None


# ---------------------------------------------------------------------------
# series

def _inverse_power(n: int, s: Fraction) -> tuple:
    """``(n**-s, exact)``; inexact values are 40-digit decimal rationals."""
    p, q = s.numerator, s.denominator
    root = round(n ** (1 / q))
    for r in (root - 1, root, root + 1):
        if r > 0 and r ** q == n:
            return Fraction(1, r ** p) if p >= 0 else Fraction(r ** -p), True
    with localcontext() as ctx:
        ctx.prec = POLYLOG_DIGITS + 10
        v = Decimal(n) ** (-Decimal(p) / Decimal(q))
        ctx.prec = POLYLOG_DIGITS
        v = +v
    return Fraction(v), False


def series_coefficients(o: Oracle, order: int) -> TruncatedSeries:
    if order < 0 or order > MAX_ORDER:
        raise UnsupportedOrder(f"order {order} outside 0..{MAX_ORDER}")
    n_range = range(order + 1)
    if o.kind == "gaussian":
        # Gamma(2n+1/2) / (Gamma(1/2) n!), prefactor sqrt(pi)/2
        cs = []
        for n in n_range:
            r = Fraction(1)
            for k in range(2 * n):
                r *= Fraction(2 * k + 1, 2)
            cs.append((-1) ** n * r / math.factorial(n))
        return TruncatedSeries(tuple(cs), "g", Prefactor(Fraction(1, 2), 1))
    if o.kind == "polylog":
        cs = [Fraction(0)]
        exact = True
        for n in range(1, order + 1):
            c, ok = _inverse_power(n, o.s)
            cs.append(c)
            exact = exact and ok
        return TruncatedSeries(tuple(cs), "g", ONE, exact)
    if o.kind == "expint":
        return TruncatedSeries(tuple((-1) ** n * math.factorial(n) for n in n_range))
    if o.kind == "lambert":
        cs = [Fraction(0)] + [Fraction(n ** (n - 1), math.factorial(n)) for n in n_range if n]
        return TruncatedSeries(tuple(cs))
    if o.kind == "sqrtshift":
        cs = []
        c = Fraction(1)
        for n in n_range:
            cs.append(c)
            c = c * (Fraction(1, 2) - n) / (n + 1)
        return TruncatedSeries(tuple(cs))
    if o.kind == "gexp":
        cs = [Fraction(0)] + [Fraction((-1) ** (n - 1), math.factorial(n - 1)) for n in n_range if n]
        return TruncatedSeries(tuple(cs))
    raise ValueError(f"unknown oracle kind {o.kind!r}")


# ---------------------------------------------------------------------------
# point values

def _cutoff(tail, tol: float) -> float:
    X = 1.0
    while tail(X) >= tol / 10:
        X *= 1.25
    return X


def _quad(kind: int, p: float, X: float, tol: float) -> OracleValue:
    v, err, n = kernels.gk15_adaptive(kind, p, 0.0, X, tol, 4000)
    if n < 0:
        raise ConvergenceFailure(f"quadrature budget exhausted (error {err:.3g} > {tol:.3g})")
    return OracleValue(v, err)


def polylog_terms(z: float, s: float, tol: float) -> int:
    """Smallest N with tail bound z^(N+1) / ((1-z)(N+1)^s) < tol/10."""
    if z == 0:
        return 1
    lz = math.log(z)
    c = -math.log1p(-z) - math.log(tol / 10)

    def ok(n):
        return (n + 1) * lz - s * math.log(n + 1) + c < 0

    hi = 1
    while not ok(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def evaluate_with_error(o: Oracle, g: float, tol: float | None = None) -> OracleValue:
    tol = o.tolerance if tol is None else tol
    g = float(g)
    if not math.isfinite(g):
        raise DomainError(f"g = {g!r} is not finite")
    if o.kind == "gaussian":
        if g < 0:
            raise DomainError("gaussian oracle needs g >= 0")
        X = _cutoff(lambda x: math.exp(-x * x) / (2 * x), tol)
        v, err = _quad(kernels.GAUSS_QUARTIC, g, X, 0.9 * tol)
        return OracleValue(v, err + tol / 10)
    if o.kind == "expint":
        if g < 0:
            raise DomainError("expint oracle needs g >= 0")
        X = _cutoff(lambda x: math.exp(-x) / (1 + g * x), tol)
        v, err = _quad(kernels.EXP_RATIONAL, g, X, 0.9 * tol)
        return OracleValue(v, err + tol / 10)
    if o.kind == "polylog":
        if not 0 <= g < 1:
            raise DomainError("polylog oracle needs 0 <= z < 1")
        if g == 0:
            return OracleValue(0.0, 0.0)
        s = float(o.s)
        N = polylog_terms(g, s, tol)
        v = kernels.polylog_sum(g, s, N)
        return OracleValue(v, tol / 10 + 4e-16 * abs(v))
    if o.kind == "lambert":
        if not 0 <= g <= math.exp(-1):
            raise DomainError("lambert oracle needs 0 <= g <= 1/e (principal branch)")
        if g == 0:
            return OracleValue(0.0, 0.0)
        E = g
        for _ in range(500):
            f = E * math.exp(-E) - g
            if abs(f) < tol * g:
                d = (1 - E) * math.exp(-E)
                return OracleValue(E, abs(f / d) if d else math.sqrt(2 * abs(f) * math.e))
            d = (1 - E) * math.exp(-E)
            if d == 0:
                break
            E = min(E - f / d, 1.0)
        raise ConvergenceFailure(f"Newton iteration for g = {g} did not converge")
    if o.kind == "sqrtshift":
        if g < -1:
            raise DomainError("sqrtshift oracle needs g >= -1")
        return OracleValue(math.sqrt(1 + g), 0.0)
    if o.kind == "gexp":
        return OracleValue(g * math.exp(-g), 0.0)
    raise ValueError(f"unknown oracle kind {o.kind!r}")


def evaluate(o: Oracle, g: float, tol: float | None = None) -> float:
    return evaluate_with_error(o, g, tol).value
