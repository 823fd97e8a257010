"""Direct and parametric (inverse-series) approximants of E(g).

The parametric representation pairs

    E = E0 + E1 * rho,        g = A(rho),

where ``A`` resums the rho-series returned by
:func:`serinv.series.normalize_to_rho`.  Evaluating ``E`` at a given ``g``
means solving ``A(rho) = g``; every real solution in the scan range is
reported and the smallest positive one is selected.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    InsufficientOrder,
    NegativeRadicand,
    NotNormalized,
    OutOfRange,
    ZeroLinearTerm,
)
from .pade import (
    PadeApproximant,
    Polynomial,
    RootBracket,
    build_pade,
    eval_pade,
    poly_gcd,
    real_roots,
    render_canonical,
)
from .series import (
    ONE,
    Prefactor,
    TruncatedSeries,
    as_rational,
    compose,
    normalize_to_rho,
    parametric_constants,
    pow_int,
    pow_rational_unit,
)

SMALLEST_POSITIVE = "smallest-positive"
STATIONARY, POLE, UNBOUNDED = "stationary", "pole", "unbounded"


@dataclass(frozen=True)
class Kind:
    """Approximant recipe.

    ``sum``       partial sum of order N
    ``pade``      plain [L/M]
    ``powered``   [L/M] built on a power of the series (see the builders)
    ``factored``  x * [L/M](f(x)/x); the same as ``powered`` with power 1
    """

    name: str
    L: int = 0
    M: int = 0
    power: int = 1

    def __post_init__(self):
        if self.name not in ("sum", "pade", "powered", "factored"):
            raise ValueError(f"unknown approximant kind {self.name!r}")
        if self.L < 0 or self.M < 0 or self.power < 1:
            raise ValueError("degrees must be nonnegative and the power positive")

    @property
    def N(self) -> int:
        return self.L

    def __str__(self) -> str:
        if self.name == "sum":
            return f"sum:{self.L}"
        if self.name == "powered":
            return f"powered:{self.L}/{self.M}:{self.power}"
        return f"{self.name}:{self.L}/{self.M}"

    @classmethod
    def parse(cls, text: str) -> Kind:
        """Parse ``sum:5``, ``pade:2/3``, ``powered:2/3:5`` or ``factored:6/7``."""
        parts = text.strip().split(":")
        try:
            if parts[0] == "sum" and len(parts) == 2:
                return PartialSum(int(parts[1]))
            L, M = (int(v) for v in parts[1].split("/"))
            if parts[0] == "pade" and len(parts) == 2:
                return Pade(L, M)
            if parts[0] == "factored" and len(parts) == 2:
                return FactoredPade(L, M)
            if parts[0] == "powered" and len(parts) == 3:
                return PoweredPade(L, M, int(parts[2]))
        except (IndexError, ValueError):
            pass
        raise ValueError(f"cannot parse approximant kind {text!r}")


def PartialSum(N: int) -> Kind:
    return Kind("sum", N)


def Pade(L: int, M: int) -> Kind:
    return Kind("pade", L, M)


def PoweredPade(L: int, M: int, power: int) -> Kind:
    return Kind("powered", L, M, power)


def FactoredPade(L: int, M: int) -> Kind:
    return Kind("factored", L, M)


def direct_order(kind: Kind) -> int:
    """Series order a direct approximant of this kind consumes."""
    if kind.name == "sum":
        return kind.L
    if kind.name == "factored":
        return kind.L + kind.M + 1
    return kind.L + kind.M


def rho_order(kind: Kind) -> int:
    """rho-series order a parametric approximant of this kind consumes."""
    if kind.name == "sum":
        return kind.L
    if kind.name == "pade":
        return kind.L + kind.M
    return kind.L + kind.M + 1


def _drop_x(s: TruncatedSeries) -> TruncatedSeries:
    # s(x)/x for a series without constant term
    if s.coeffs[0] != 0:
        raise NotNormalized("factoring out x needs a zero constant term")
    return TruncatedSeries(s.coeffs[1:], s.variable, s.prefactor, s.exact)


# ---------------------------------------------------------------------------
# direct side

@dataclass(frozen=True)
class DirectApproximant:
    kind: Kind
    series: TruncatedSeries | None = None
    pade: PadeApproximant | None = None

    @property
    def prefactor(self) -> Prefactor:
        src = self.series if self.series is not None else self.pade
        return src.prefactor

    def __call__(self, g: float) -> float:
        k = self.kind
        if k.name == "sum":
            return self.series(float(g))
        if k.name == "pade":
            return eval_pade(self.pade, g)
        if k.name == "factored":
            return float(g) * eval_pade(self.pade, g)
        inner = eval_pade(self.pade, g)
        if inner < 0:
            raise NegativeRadicand(f"[{k.L}/{k.M}] of E^{k.power} is {inner:.6g} < 0 at g = {g}")
        return self.series.prefactor.value * inner ** (1.0 / k.power)

    def render(self) -> str:
        k = self.kind
        if k.name == "sum":
            return str(self.series)
        if k.name == "pade":
            return render_canonical(self.pade)
        if k.name == "factored":
            return render_canonical(self.pade, x_factor=1)
        pf = self.series.prefactor
        head = "" if pf.is_one() else f"{pf}*"
        return f"{head}({render_canonical(self.pade)})^(1/{k.power})"


def build_direct(src: TruncatedSeries, kind: Kind) -> DirectApproximant:
    """Approximant of ``E(g)`` from its own series.

    ``powered`` builds the Padé of the reduced series raised to ``power`` and
    evaluates its ``1/power`` root; ``factored`` needs ``E0 = 0``.
    """
    need = direct_order(kind)
    if src.order < need:
        raise InsufficientOrder(f"{kind} needs order {need}, series has {src.order}")
    src = src.truncate(need)
    if kind.name == "sum":
        return DirectApproximant(kind, series=src)
    if kind.name == "pade":
        return DirectApproximant(kind, pade=build_pade(src, kind.L, kind.M))
    if kind.name == "factored":
        return DirectApproximant(kind, pade=build_pade(_drop_x(src), kind.L, kind.M))
    reduced = src.reduced()
    if reduced.coeffs[0] == 0:
        raise NotNormalized("powered approximant needs a nonzero constant term")
    powered = pow_int(reduced, kind.power)
    return DirectApproximant(kind, series=src, pade=build_pade(powered, kind.L, kind.M))


# ---------------------------------------------------------------------------
# inverse side

@dataclass(frozen=True)
class RhoMap:
    """``g`` as a function of ``rho``.

    For ``powered`` (and ``factored``) kinds ``g = rho * R(rho)**m`` where
    ``R`` is the Padé of ``(g/rho)**(1/m)``.
    """

    kind: Kind
    series: TruncatedSeries
    pade: PadeApproximant | None = None

    @property
    def m(self) -> int:
        return self.kind.power if self.kind.name in ("powered", "factored") else 1

    def __call__(self, rho: float) -> float:
        k = self.kind.name
        if k == "sum":
            return self.series(float(rho))
        if k == "pade":
            return eval_pade(self.pade, rho)
        return float(rho) * eval_pade(self.pade, rho) ** self.m

    def rational(self) -> tuple:
        """Exact ``(N, D)`` with ``g = N/D``."""
        if self.kind.name == "sum":
            return Polynomial(self.series.coeffs), Polynomial((1,))
        P, Q = self._reduced_pq()
        if self.kind.name == "pade":
            return P, Q
        return Polynomial((0, 1)) * P ** self.m, Q ** self.m

    def _reduced_pq(self) -> tuple:
        P, Q = self.pade.numerator, self.pade.denominator
        if P.is_zero():
            return P, Polynomial((1,))
        common = poly_gcd(P, Q)
        if common.degree > 0:
            P, Q = P // common, Q // common
        return P, Q

    def derivative(self, rho: float) -> float:
        rho = float(rho)
        if self.kind.name == "sum":
            d = self.series.coeffs
            return sum(j * float(c) * rho ** (j - 1) for j, c in enumerate(d) if j)
        P, Q = self._reduced_pq()
        p, q = P(rho), Q(rho)
        dp, dq = P.derivative()(rho), Q.derivative()(rho)
        dr = (dp * q - p * dq) / (q * q)
        if self.kind.name == "pade":
            return dr
        r = p / q
        return r ** self.m + self.m * rho * r ** (self.m - 1) * dr

    def stationary_polynomials(self) -> list:
        """Polynomials whose real roots contain every zero of ``dg/drho``."""
        if self.kind.name == "sum":
            return [Polynomial(self.series.coeffs).derivative()]
        P, Q = self._reduced_pq()
        W = P.derivative() * Q - P * Q.derivative()
        if self.kind.name == "pade":
            return [W]
        out = [P * Q + Polynomial((0, self.m)) * W]
        if self.m > 1 and P.degree > 0:
            out.append(P)
        return out

    def pole_polynomial(self) -> Polynomial | None:
        if self.kind.name == "sum":
            return None
        return self._reduced_pq()[1]

    def render(self) -> str:
        if self.kind.name == "sum":
            return str(self.series)
        if self.kind.name == "pade":
            return render_canonical(self.pade, "rho")
        return render_canonical(self.pade, "rho", power=self.m, x_factor=1)


def build_rho_map(rho_series: TruncatedSeries, kind: Kind) -> RhoMap:
    c = rho_series.coeffs
    if rho_series.order < 1 or c[0] != 0 or c[1] != 1:
        raise NotNormalized("rho-series must start rho + O(rho^2)")
    need = rho_order(kind)
    if rho_series.order < need:
        raise InsufficientOrder(f"{kind} needs a rho-series of order {need}, got {rho_series.order}")
    s = rho_series.truncate(need)
    if kind.name == "sum":
        return RhoMap(kind, s)
    if kind.name == "pade":
        return RhoMap(kind, s, build_pade(s, kind.L, kind.M))
    inner = _drop_x(s)
    m = 1 if kind.name == "factored" else kind.power
    root = inner if m == 1 else pow_rational_unit(inner, 1, m)
    return RhoMap(kind, s, build_pade(root, kind.L, kind.M))


def _positive_root_bound(p: Polynomial) -> Fraction:
    # Cauchy bound on the moduli of all roots
    lead = abs(p.coeffs[-1])
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _smallest_positive_root(p: Polynomial, tol: float) -> RootBracket | None:
    if p.is_zero() or p.degree < 1:
        return None
    roots = real_roots(p, 0, _positive_root_bound(p) + 1, tol)
    return roots[0] if roots else None


class Validity(NamedTuple):
    rho_max: float
    kind: str
    g_sup: float
    bracket: RootBracket | None = None


def _validity_of(gmap: RhoMap, tol: float = 1e-13) -> Validity:
    candidates = []
    for p in gmap.stationary_polynomials():
        r = _smallest_positive_root(p, tol)
        if r is not None:
            candidates.append((r.refined, STATIONARY, r))
    pole = gmap.pole_polynomial()
    if pole is not None:
        r = _smallest_positive_root(pole, tol)
        if r is not None:
            candidates.append((r.refined, POLE, r))
    if not candidates:
        N, D = gmap.rational()
        if N.degree > D.degree:
            sup = math.inf if N.coeffs[-1] / D.coeffs[-1] > 0 else -math.inf
        elif N.degree == D.degree:
            sup = float(N.coeffs[-1] / D.coeffs[-1])
        else:
            sup = 0.0
        return Validity(math.inf, UNBOUNDED, sup, None)
    # a pole wins ties: g is infinite there
    rho, kind, br = min(candidates, key=lambda t: (t[0], t[1] != POLE))
    if kind == POLE:
        return Validity(rho, POLE, math.inf, br)
    N, D = gmap.rational()
    m = (br.low + br.high) / 2
    return Validity(rho, STATIONARY, float(N(m) / D(m)), br)


@dataclass(frozen=True)
class ParametricRep:
    """``E = E0 + E1*rho`` together with ``g = g_of_rho(rho)``."""

    E0: Prefactor
    E1: Prefactor
    g_of_rho: RhoMap
    rho_max: float
    rho_max_kind: str
    g_sup: float
    rho_max_bracket: RootBracket | None = field(default=None, compare=False)

    def E_of_rho(self, rho: float) -> float:
        return self.E0.value + self.E1.value * float(rho)

    def default_scan_limit(self) -> float:
        env = os.environ.get("SERINV_SCAN_LIMIT")
        if env:
            return float(env)
        return 10.0 if self.rho_max_kind == UNBOUNDED else 10.0 * self.rho_max


def build_parametric(rho_series: TruncatedSeries, E0, E1, kind: Kind) -> ParametricRep:
    gmap = build_rho_map(rho_series, kind)
    v = _validity_of(gmap)
    E0 = E0 if isinstance(E0, Prefactor) else Prefactor(as_rational(E0))
    E1 = E1 if isinstance(E1, Prefactor) else Prefactor(as_rational(E1))
    return ParametricRep(E0, E1, gmap, v.rho_max, v.kind, v.g_sup, v.bracket)


def parametric_from_direct(E_series: TruncatedSeries, kind: Kind) -> ParametricRep:
    """Normalize ``E_series`` to its rho-series and build the representation."""
    E0, E1 = parametric_constants(E_series)
    return build_parametric(normalize_to_rho(E_series), E0, E1, kind)


def validity(rep: ParametricRep) -> Validity:
    return _validity_of(rep.g_of_rho)


@dataclass(frozen=True)
class BranchReport:
    g_target: float
    roots: tuple
    brackets: tuple = ()
    selected: int = 0
    policy: str = SMALLEST_POSITIVE
    residuals: tuple = ()

    @property
    def rho(self) -> float:
        return self.roots[self.selected]

    def __len__(self) -> int:
        return len(self.roots)


def solve_rho(rep: ParametricRep, g_target: float, tol: float = 1e-13,
              scan_limit: float | None = None, residual_tol: float = 1e-9) -> BranchReport:
    """All solutions of ``g(rho) = g_target`` in ``(0, scan_limit)``.

    Roots of ``N - g*D`` are isolated exactly (Sturm) and refined to ``tol``;
    a root is kept when ``|g(rho) - g*|`` is below
    ``residual_tol*max(1, |g*|)`` plus the slope times the bracket width.
    """
    g_target = float(g_target)
    if not g_target >= 0:
        raise OutOfRange(f"g = {g_target} must be nonnegative")
    if g_target == 0:
        return BranchReport(0.0, (0.0,), (), 0, SMALLEST_POSITIVE, (0.0,))
    limit = rep.default_scan_limit() if scan_limit is None else float(scan_limit)
    gmap = rep.g_of_rho
    N, D = gmap.rational()
    gq = as_rational(g_target)
    target_poly = N - D * gq
    roots, brackets, residuals = [], [], []
    if not target_poly.is_zero():
        for br in real_roots(target_poly, 0, as_rational(limit), tol):
            mid = (br.low + br.high) / 2
            if D(mid) == 0:
                continue
            rho = br.refined
            resid = abs(gmap(rho) - g_target)
            allowed = residual_tol * max(1.0, abs(g_target)) \
                + abs(gmap.derivative(rho)) * max(float(br.high - br.low), 2.3e-16 * rho)
            if resid <= allowed:
                roots.append(rho)
                brackets.append(br)
                residuals.append(resid)
    if not roots:
        why = ""
        if rep.rho_max_kind == STATIONARY and g_target > rep.g_sup:
            why = f" (above g_sup = {rep.g_sup:.10g})"
        raise OutOfRange(f"no solution of g(rho) = {g_target} in (0, {limit:.6g}){why}")
    return BranchReport(g_target, tuple(roots), tuple(brackets), 0, SMALLEST_POSITIVE,
                        tuple(residuals))


def eval_E(rep: ParametricRep, g_target: float, tol: float = 1e-13,
           branch: int | None = None) -> float:
    """``E0 + E1*rho`` at the selected (default: smallest positive) root."""
    report = solve_rho(rep, g_target, tol)
    idx = report.selected if branch is None else branch
    return rep.E_of_rho(report.roots[idx])


class AsymptoticLimit(NamedTuple):
    E_lim: float
    exponent: Fraction
    K0: float


def asymptotic_limit(rep: ParametricRep) -> AsymptoticLimit | None:
    """Large-``g`` behaviour implied by a pole at ``rho0``.

    Near the pole ``g ~ K0 (rho - rho0)**(-m)``, hence
    ``E -> E0 + E1*rho0`` with corrections in ``g**(-1/m)``.
    """
    if rep.rho_max_kind != POLE:
        return None
    gmap = rep.g_of_rho
    P, Q = gmap._reduced_pq()
    br = rep.rho_max_bracket
    rho0 = float((br.low + br.high) / 2)
    ratio = P(rho0) / Q.derivative()(rho0)
    m = gmap.m
    K0 = ratio if gmap.kind.name == "pade" else rho0 * ratio ** m
    return AsymptoticLimit(rep.E_of_rho(rho0), Fraction(-1, m), K0)


def match_parametric(E_series: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Coefficients ``c_j`` of ``g = rho + c_2 rho^2 + ...`` chosen so that
    ``E(g(rho)) = E0 + E1*rho`` through the truncation order.

    Solved order by order: the ``rho**n`` coefficient of the composition is
    ``E1*c_n`` plus terms fixed by ``c_2..c_{n-1}``.
    """
    e = E_series.reduced()
    N = e.order if order is None else order
    if e.coeffs[1] == 0:
        raise ZeroLinearTerm("E1 = 0")
    e1 = e.coeffs[1]
    c = [Fraction(0), Fraction(1)] + [Fraction(0)] * (N - 1)
    for n in range(2, N + 1):
        trial = compose(e.truncate(N), TruncatedSeries(tuple(c), "rho"))
        c[n] = -trial.coeffs[n] / e1
    return TruncatedSeries(tuple(c), "rho")
