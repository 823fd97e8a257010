"""Exact Padé approximants, rational functions and Sturm root isolation.

All polynomial arithmetic is over :class:`fractions.Fraction`.  The Padé
denominator is obtained from the Toeplitz system

    sum_{j=1..M} c[L+i-j] * q_j = -c[L+i],      i = 1..M

solved by fraction-free (Bareiss) elimination after clearing row
denominators, so the printed integer coefficient sets can be compared
structurally.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .errors import DegeneratePadeTable, InsufficientOrder, NearPole, PrefactorMismatch
from .series import ONE, Prefactor, TruncatedSeries, as_rational, reciprocal

NEAR_POLE_ABS = 1e-300
NEAR_POLE_REL = 1e-16
INEXACT_DIGITS = 50


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, ``coeffs[k]`` multiplies ``x**k``; trailing zeros trimmed."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x):
        if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        xf = float(x)
        acc = 0.0
        for c in self._floats:
            acc = acc * xf + c
        return acc

    @property
    def _floats(self) -> tuple:
        # cached descending float coefficients for fast Horner evaluation
        try:
            return self.__dict__["_fl"]
        except KeyError:
            fl = tuple(float(c) for c in reversed(self.coeffs))
            object.__setattr__(self, "_fl", fl)
            return fl

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[k] + other[k] for k in range(n)))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            q = as_rational(other)
            return Polynomial(tuple(c * q for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> Polynomial:
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def __divmod__(self, other: Polynomial):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 1)
        for k in range(len(rem) - 1 - dq, -1, -1):
            f = rem[k + dq] / lead
            quo[k] = f
            if f:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= f * c
        return Polynomial(tuple(quo)), Polynomial(tuple(rem[:dq]))

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def monic(self) -> Polynomial:
        return self * (1 / self.coeffs[-1]) if self.coeffs else self

    def primitive(self) -> tuple:
        """``(content, ints)`` with ``self == content * ints`` and gcd(ints) = 1.

        The content is positive; the sign stays with the integer coefficients.
        """
        if self.is_zero():
            return Fraction(0), []
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return Fraction(g, den), [v // g for v in ints]

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def shift_down(self, k: int) -> Polynomial:
        """Divide by ``x**k`` (the low coefficients must vanish)."""
        if any(self.coeffs[:k]):
            raise ValueError("polynomial is not divisible by x**k")
        return Polynomial(self.coeffs[k:])

    def to_series(self, order: int, variable: str = "g") -> TruncatedSeries:
        return TruncatedSeries(tuple(self[k] for k in range(order + 1)), variable)


def _int_coeffs(p: Polynomial) -> list:
    # primitive integer coefficients; positive content keeps every sign
    return p.primitive()[1]


def _prem(a: list, b: list) -> list:
    """Remainder of ``a`` by ``b`` up to a positive factor, as primitive ints."""
    rem = list(a)
    lb = b[-1]
    s, l = (1 if lb > 0 else -1), abs(lb)
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        f = rem[-1] * s
        k = len(rem) - 1 - db
        rem = [r * l for r in rem]
        for j, c in enumerate(b):
            rem[k + j] -= f * c
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        g = math.gcd(*rem)
        rem = [r // g for r in rem]
    return rem


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (primitive remainder sequence over the integers)."""
    if b.is_zero():
        return a.monic()
    if a.is_zero():
        return b.monic()
    x, y = _int_coeffs(a), _int_coeffs(b)
    while y:
        x, y = y, _prem(x, y)
    return Polynomial(tuple(x)).monic()


def squarefree(p: Polynomial) -> Polynomial:
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    return p // g if g.degree > 0 else p


def _positive_primitive(p: Polynomial) -> Polynomial:
    # rescale by a positive constant only: signs must be preserved for Sturm
    return Polynomial(tuple(_int_coeffs(p)))


def _int_sturm(p: list) -> list:
    seq = [p]
    d = [k * c for k, c in enumerate(p) if k]
    if not any(d):
        return seq
    g = math.gcd(*d)
    seq.append([c // g for c in d])
    while True:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def sturm_sequence(p: Polynomial) -> list:
    """Sturm sequence of ``p``, each member scaled to primitive integers."""
    return [Polynomial(tuple(q)) for q in _int_sturm(_int_coeffs(p))]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at(ints: list, x: Fraction) -> int:
    # sign of the homogenised value d**deg * p(n/d), all in integers
    n, d = x.numerator, x.denominator
    if not ints:
        return 0
    acc = ints[-1]
    mult = d
    for c in reversed(ints[:-1]):
        acc = acc * n + c * mult
        mult *= d
    return _sign(acc)


def _variations(seq: list, x: Fraction) -> int:
    last = 0
    n = 0
    for q in seq:
        s = _sign_at(q, x)
        if s:
            if last and s != last:
                n += 1
            last = s
    return n


def sign_variations(seq: Sequence[Polynomial], x) -> int:
    return _variations([_int_coeffs(q) for q in seq], as_rational(x))


@dataclass(frozen=True)
class RootBracket:
    """Certified isolating interval for one real root; ``low == high`` if exact."""

    low: Fraction
    high: Fraction
    refined: float

    @property
    def exact(self) -> bool:
        return self.low == self.high


def real_roots(q: Polynomial, lo, hi, tol: float = 1e-12) -> list:
    """All distinct real roots of ``q`` in the open interval ``(lo, hi)``.

    Roots are isolated with Sturm sign-variation counts on the square-free
    part and refined by exact bisection until ``high - low < tol``.
    """
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("real_roots needs lo < hi")
    if q.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    if q.degree < 1:
        return []
    p = _int_coeffs(squarefree(q))
    seq = _int_sturm(p)
    tol_q = as_rational(tol)

    # V(a) - V(b) counts distinct roots in (a, b]
    def n_open(a, va, b, vb):
        return va - vb - (1 if _sign_at(p, b) == 0 else 0)

    def split_point(a, b):
        for num, den in ((1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 7), (4, 7)):
            m = a + (b - a) * num / den
            if _sign_at(p, m) != 0:
                return m
        return a + (b - a) / 2

    found = []
    stack = [(lo, _variations(seq, lo), hi, _variations(seq, hi))]
    while stack:
        a, va, b, vb = stack.pop()
        n = n_open(a, va, b, vb)
        if n <= 0:
            continue
        if n == 1:
            found.append(_refine(p, seq, a, b, tol_q))
            continue
        m = split_point(a, b)
        vm = _variations(seq, m)
        stack.append((a, va, m, vm))
        stack.append((m, vm, b, vb))
    found.sort(key=lambda r: r.low)
    return found


def _refine(p, seq, a, b, tol) -> RootBracket:
    # exactly one simple root of p lies in the open interval (a, b)
    sa, sb = _sign_at(p, a), _sign_at(p, b)
    while b - a >= tol:
        m = (a + b) / 2
        sm = _sign_at(p, m)
        if sm == 0:
            return RootBracket(m, m, float(m))
        if sa and sb:
            left = sm != sa
        else:
            left = _variations(seq, a) - _variations(seq, m) == 1
        if left:
            b, sb = m, sm
        else:
            a, sa = m, sm
    return RootBracket(a, b, float((a + b) / 2))


# ---------------------------------------------------------------------------
# rational functions and Padé approximants

@dataclass(frozen=True)
class RationalFunction:
    """``prefactor * numerator(x) / denominator(x)``."""

    numerator: Polynomial
    denominator: Polynomial
    prefactor: Prefactor = field(default=ONE)
    variable: str = "g"

    def __call__(self, x):
        return eval_pade(self, x)

    def series_expansion(self, order: int) -> TruncatedSeries:
        num = self.numerator.to_series(order, self.variable)
        den = self.denominator.to_series(order, self.variable)
        s = num * reciprocal(den)
        return TruncatedSeries(s.coeffs, self.variable, self.prefactor)

    def poles(self, lo, hi, tol: float = 1e-12) -> list:
        """Real roots of the denominator in ``(lo, hi)`` not cancelled by the numerator."""
        den = self.denominator
        common = poly_gcd(self.numerator, den) if not self.numerator.is_zero() else den
        if common.degree > 0:
            den = den // common
        return real_roots(den, lo, hi, tol) if den.degree > 0 else []


@dataclass(frozen=True)
class PadeApproximant(RationalFunction):
    """``[L/M]`` approximant with ``denominator(0) == 1``."""

    L: int = 0
    M: int = 0
    exact: bool = True


def solve_bareiss(A: Sequence[Sequence], b: Sequence) -> list:
    """Solve ``A x = b`` exactly; raises :class:`DegeneratePadeTable` if singular.

    Rows are scaled to integers, eliminated fraction-free, and back
    substituted in rationals.  Pivoting takes the first nonzero entry.
    """
    n = len(A)
    rows = []
    for row, rhs in zip(A, b):
        vals = [as_rational(v) for v in row] + [as_rational(rhs)]
        den = math.lcm(*(v.denominator for v in vals))
        rows.append([int(v * den) for v in vals])
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if piv is None:
            raise DegeneratePadeTable(f"singular system at column {k}")
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        rk = rows[k]
        pk = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, n + 1):
                ri[j] = (ri[j] * pk - f * rk[j]) // prev
            ri[k] = 0
        prev = pk
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(rows[i][n]) - sum((rows[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = s / rows[i][i]
    return x


def _round_sig(q: Fraction, digits: int = INEXACT_DIGITS) -> Fraction:
    if not q:
        return q
    with localcontext() as ctx:
        ctx.prec = digits
        return Fraction(Decimal(q.numerator) / Decimal(q.denominator))


def build_pade(src: TruncatedSeries, L: int, M: int) -> PadeApproximant:
    """The ``[L/M]`` Padé approximant matching ``src`` through order ``L+M``."""
    if L < 0 or M < 0:
        raise ValueError("Padé degrees must be nonnegative")
    if src.order < L + M:
        raise InsufficientOrder(f"[{L}/{M}] needs order {L + M}, series has {src.order}")
    c = src.coeffs

    def cc(k):
        return c[k] if k >= 0 else Fraction(0)

    if M == 0:
        q = [Fraction(1)]
    else:
        A = [[cc(L + i - j) for j in range(1, M + 1)] for i in range(1, M + 1)]
        rhs = [-cc(L + i) for i in range(1, M + 1)]
        q = [Fraction(1)] + solve_bareiss(A, rhs)
    p = [sum((q[j] * cc(k - j) for j in range(min(k, M) + 1)), Fraction(0))
         for k in range(L + 1)]
    if not src.exact:
        # decimal-approximated input: exact digits beyond its precision only
        # inflate the integers every later root search has to carry
        p = [_round_sig(v) for v in p]
        q = [Fraction(1)] + [_round_sig(v) for v in q[1:]]
    return PadeApproximant(Polynomial(tuple(p)), Polynomial(tuple(q)), src.prefactor,
                           src.variable, L, M, src.exact)


def eval_pade(p: RationalFunction, x) -> float:
    """Float value of ``prefactor * P(x) / Q(x)``."""
    num = p.numerator(float(x))
    den = p.denominator(float(x))
    if abs(den) < NEAR_POLE_ABS or abs(den) < NEAR_POLE_REL * abs(num):
        raise NearPole(f"|Q({x})| = {abs(den):.3g} is at a pole")
    return p.prefactor.value * num / den


def eval_pade_exact(p: RationalFunction, x) -> Prefactor:
    """Exact value at rational ``x``, returned as ``rational * pi**(k/2)``."""
    x = as_rational(x)
    den = p.denominator(x)
    if den == 0:
        raise NearPole(f"x = {x} is a pole")
    return p.prefactor * (p.numerator(x) / den)


def derivative(p: RationalFunction) -> RationalFunction:
    """``(P'Q - PQ')/Q**2`` as an exact rational function."""
    P, Q = p.numerator, p.denominator
    num = P.derivative() * Q - P * Q.derivative()
    return RationalFunction(num, Q * Q, p.prefactor, p.variable)


# ---------------------------------------------------------------------------
# canonical integer-cleared rendering

@dataclass(frozen=True)
class CanonicalForm:
    """``constant * pi**(k/2) * x**shift * N(x) / D(x)`` with primitive integer N, D.

    ``D``'s lowest nonzero coefficient is positive.
    """

    constant: Fraction
    pi_half_power: int
    shift: int
    numerator: tuple
    denominator: tuple


def canonical_form(p: RationalFunction) -> CanonicalForm:
    num = p.numerator
    den = p.denominator
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    shift = 0
    if not num.is_zero():
        shift = num.valuation()
        num = num.shift_down(shift)
    cn, ni = num.primitive()
    cd, di = den.primitive()
    lowest = next(v for v in di if v)
    if lowest < 0:
        di = [-v for v in di]
        ni = [-v for v in ni]
    const = p.prefactor.rational * (cn / cd if cn else Fraction(0))
    if not ni:
        ni = [0]
    return CanonicalForm(const, p.prefactor.pi_half_power if const else 0, shift,
                         tuple(ni), tuple(di))


def format_int_poly(ints: Sequence[int], var: str) -> str:
    out = ""
    for k, v in enumerate(ints):
        if v == 0:
            continue
        x = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = str(abs(v))
        term = mag if not x else (x if mag == "1" else f"{mag}*{x}")
        if not out:
            out = term if v > 0 else f"-{term}"
        else:
            out += (" + " if v > 0 else " - ") + term
    return out or "0"


def render_canonical(p: RationalFunction, var: str | None = None, power: int = 1,
                     x_factor: int = 0) -> str:
    """Byte-stable text form of ``x**x_factor * p(x)**power``."""
    var = var or p.variable
    cf = canonical_form(p)
    const = cf.constant ** power
    pi = Prefactor(1, cf.pi_half_power * power)
    xs = cf.shift * power + x_factor
    parts = []
    if const != 1 or pi.pi_half_power:
        c = str(Prefactor(const, pi.pi_half_power))
        parts.append(c)
    if xs:
        parts.append(var if xs == 1 else f"{var}^{xs}")
    N = format_int_poly(cf.numerator, var)
    D = format_int_poly(cf.denominator, var)
    if power == 1:
        body = f"({N})/({D})"
    else:
        body = f"({N})^{power}/({D})^{power}"
    if N in ("1",) and power == 1:
        body = f"1/({D})"
    return "*".join(parts + [body])
