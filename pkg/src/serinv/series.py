"""Exact truncated power series over the rationals.

A :class:`TruncatedSeries` stores ``coeffs[0..N]`` as :class:`fractions.Fraction`
together with an exact :class:`Prefactor` ``r * pi**(k/2)``, so that the full
coefficient of ``x**j`` is ``prefactor * coeffs[j]``.  The truncation order is
``N = len(coeffs) - 1``; coefficients above ``N`` are unknown, not zero, and
every binary operation truncates to the shorter operand.

Reversion uses the Lagrange inversion formula

    b_n = (1/n) [x**(n-1)] (x / a(x))**n

and is checked in the test-suite against the composition identity
``compose(a, revert(a)) == x``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import (
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    PrefactorMismatch,
    PrefactorNotOne,
    VariableMismatch,
    ZeroLinearTerm,
)

RationalLike = Union[int, Fraction, str]

#: Variable tags used throughout: direct series in ``g``, inverse in ``dE``,
#: normalized inverse in ``rho``.
VARIABLES = ("g", "dE", "rho")


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions, ``"num/den"`` strings and floats to a Fraction.

    Floats go through their shortest ``repr`` so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError(f"non-finite value {x!r}")
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def format_rational(q: Fraction) -> str:
    """``"num/den"``, or ``"num"`` when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Prefactor:
    """Exact constant ``rational * pi**(pi_half_power/2)``."""

    rational: Fraction = Fraction(1)
    pi_half_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rational", as_rational(self.rational))
        object.__setattr__(self, "pi_half_power", int(self.pi_half_power))

    @property
    def value(self) -> float:
        if self.rational == 0:
            return 0.0
        return float(self.rational) * math.pi ** (self.pi_half_power / 2)

    def is_one(self) -> bool:
        return self.rational == 1 and self.pi_half_power == 0

    def is_rational(self) -> bool:
        return self.pi_half_power == 0 or self.rational == 0

    def __mul__(self, other):
        if isinstance(other, Prefactor):
            return Prefactor(self.rational * other.rational,
                             self.pi_half_power + other.pi_half_power)
        return Prefactor(self.rational * as_rational(other), self.pi_half_power)

    __rmul__ = __mul__

    def __truediv__(self, other: Prefactor) -> Prefactor:
        return Prefactor(self.rational / other.rational,
                         self.pi_half_power - other.pi_half_power)

    def __pow__(self, k: int) -> Prefactor:
        return Prefactor(self.rational ** k, self.pi_half_power * k)

    def __neg__(self) -> Prefactor:
        return Prefactor(-self.rational, self.pi_half_power)

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        r = format_rational(self.rational)
        k = self.pi_half_power
        if k == 0 or self.rational == 0:
            return r
        if k == 1:
            pi = "sqrt(pi)"
        elif k % 2 == 0:
            pi = "pi" if k == 2 else f"pi^{k // 2}"
        else:
            pi = f"pi^({k}/2)"
        return pi if r == "1" else f"{r}*{pi}"

    def to_json(self) -> dict:
        return {"rational": format_rational(self.rational),
                "pi_half_power": self.pi_half_power}

    @classmethod
    def from_json(cls, obj: dict) -> Prefactor:
        return cls(as_rational(obj.get("rational", "1")),
                   int(obj.get("pi_half_power", 0)))


ONE = Prefactor()
SQRT_PI = Prefactor(1, 1)


@dataclass(frozen=True)
class TruncatedSeries:
    """``prefactor * sum(coeffs[j] * x**j, j=0..order)`` with unknown tail.

    ``exact`` is False when the coefficients are decimal approximations of
    irrational numbers; results derived from such a series inherit the flag.
    """

    coeffs: tuple
    variable: str = "g"
    prefactor: Prefactor = field(default=ONE)
    exact: bool = True

    def __post_init__(self):
        cs = tuple(as_rational(c) for c in self.coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)
        if not isinstance(self.prefactor, Prefactor):
            raise TypeError("prefactor must be a Prefactor")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def full_coefficient(self, j: int) -> Prefactor:
        """Exact value of the ``x**j`` coefficient, prefactor included."""
        return self.prefactor * self.coeffs[j]

    def _replace(self, coeffs, variable=None, prefactor=None, exact=None):
        return TruncatedSeries(
            tuple(coeffs),
            self.variable if variable is None else variable,
            self.prefactor if prefactor is None else prefactor,
            self.exact if exact is None else exact,
        )

    def reduced(self) -> TruncatedSeries:
        """Same coefficients with the prefactor dropped."""
        return self._replace(self.coeffs, prefactor=ONE)

    def fold_rational(self) -> TruncatedSeries:
        """Move the rational part of the prefactor into the coefficients."""
        r = self.prefactor.rational
        return self._replace([c * r for c in self.coeffs],
                             prefactor=Prefactor(1, self.prefactor.pi_half_power))

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return self._replace(self.coeffs[: order + 1])

    def with_variable(self, variable: str) -> TruncatedSeries:
        return self._replace(self.coeffs, variable=variable)

    # operator sugar
    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, -other)

    def __neg__(self):
        return self._replace([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        q = as_rational(other)
        return self._replace([c * q for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return pow_int(self, k)

    def __call__(self, x):
        return evaluate(self, x)

    def __str__(self) -> str:
        body = ""
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            x = "" if j == 0 else (self.variable if j == 1 else f"{self.variable}^{j}")
            mag = format_rational(abs(c))
            term = mag if not x else (x if mag == "1" else f"{mag}*{x}")
            if not body:
                body = term if c > 0 else f"-{term}"
            else:
                body += (" + " if c > 0 else " - ") + term
        body = (body or "0") + f" + O({self.variable}^{self.order + 1})"
        if self.prefactor.is_one():
            return body
        return f"{self.prefactor} * ({body})"

    # interchange format
    def to_json(self) -> dict:
        obj = {
            "variable": self.variable,
            "prefactor": self.prefactor.to_json(),
            "coeffs": [format_rational(c) for c in self.coeffs],
        }
        if not self.exact:
            obj["exact"] = False
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> TruncatedSeries:
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("series JSON must be an object with a 'coeffs' list")
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or not coeffs:
            raise ValueError("'coeffs' must be a non-empty list")
        for c in coeffs:
            if isinstance(c, float) or isinstance(c, bool):
                raise ValueError(f"coefficient {c!r} must be an integer or 'num/den' string")
        pf = obj.get("prefactor") or {}
        if not isinstance(pf, dict):
            raise ValueError("'prefactor' must be an object")
        return cls(tuple(as_rational(c) for c in coeffs),
                   str(obj.get("variable", "g")),
                   Prefactor.from_json(pf),
                   bool(obj.get("exact", True)))


def series(coeffs: Iterable, variable: str = "g", prefactor: Prefactor = ONE,
           exact: bool = True) -> TruncatedSeries:
    return TruncatedSeries(tuple(coeffs), variable, prefactor, exact)


def identity(order: int, variable: str = "g") -> TruncatedSeries:
    return series([0, 1] + [0] * (order - 1), variable) if order >= 1 else series([0], variable)


# ---------------------------------------------------------------------------
# arithmetic

def _check_var(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.variable != b.variable:
        raise VariableMismatch(f"series in {a.variable!r} and {b.variable!r}")


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum, truncated to the shorter order.

    Prefactors with equal powers of pi are reconciled by rescaling ``b``.
    """
    _check_var(a, b)
    n = min(a.order, b.order) + 1
    pa, pb = a.prefactor, b.prefactor
    if pa.rational == 0:
        return b._replace(b.coeffs[:n], exact=a.exact and b.exact)
    if pb.rational == 0:
        return a._replace(a.coeffs[:n], exact=a.exact and b.exact)
    if pa.pi_half_power != pb.pi_half_power:
        raise PrefactorMismatch(f"cannot add series with prefactors {pa} and {pb}")
    scale = pb.rational / pa.rational
    cs = [x + scale * y for x, y in zip(a.coeffs[:n], b.coeffs[:n])]
    return a._replace(cs, prefactor=pa, exact=a.exact and b.exact)


def _cauchy(x: Sequence[Fraction], y: Sequence[Fraction], n: int) -> list:
    out = []
    for k in range(n):
        s = Fraction(0)
        for i in range(k + 1):
            xi = x[i]
            if xi:
                s += xi * y[k - i]
        out.append(s)
    return out


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product; prefactors multiply."""
    _check_var(a, b)
    n = min(a.order, b.order) + 1
    return a._replace(_cauchy(a.coeffs, b.coeffs, n),
                      prefactor=a.prefactor * b.prefactor,
                      exact=a.exact and b.exact)


def pow_int(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """``a**k`` for integer ``k >= 1`` by binary powering of truncated products."""
    if int(k) != k or k < 1:
        raise ValueError(f"pow_int needs a positive integer exponent, got {k!r}")
    k = int(k)
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1/a`` for a series with nonzero constant term."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    inv0 = 1 / c[0]
    b = [inv0]
    for n in range(1, len(c)):
        s = sum((c[k] * b[n - k] for k in range(1, n + 1)), Fraction(0))
        b.append(-s * inv0)
    pf = ONE / a.prefactor if a.prefactor.rational != 0 else ONE
    return a._replace(b, prefactor=pf)


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return mul(a, reciprocal(b))


def pow_rational_unit(a: TruncatedSeries, p: int, q: int) -> TruncatedSeries:
    """``a**(p/q)`` for a series with constant term 1 and unit prefactor.

    The coefficients follow from ``q*a*b' = p*a'*b``:

        q*n*b_n = sum_{k=1..n} a_k * b_{n-k} * (p*k - q*(n-k))
    """
    if q < 1 or int(q) != q or int(p) != p:
        raise ValueError("pow_rational_unit needs integer p and positive integer q")
    if not a.prefactor.is_one():
        raise PrefactorNotOne(f"prefactor {a.prefactor} must be folded out first")
    c = a.coeffs
    if c[0] != 1:
        raise NonUnitConstantTerm(f"constant term is {format_rational(c[0])}, expected 1")
    b = [Fraction(1)]
    for n in range(1, len(c)):
        s = Fraction(0)
        for k in range(1, n + 1):
            if c[k]:
                s += c[k] * b[n - k] * (p * k - q * (n - k))
        b.append(s / (q * n))
    return a._replace(b)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(x))`` by Horner's scheme over truncated series.

    The result is in ``inner``'s variable and carries ``outer``'s prefactor.
    ``inner`` may only carry a rational prefactor (it is folded in).
    """
    if inner.coeffs[0] != 0:
        raise NonzeroInnerConstant("inner series must have zero constant term")
    if not inner.prefactor.is_rational():
        raise PrefactorMismatch("cannot substitute a series with an irrational prefactor")
    if inner.prefactor.rational == 0:
        inner = inner._replace([0] * len(inner), prefactor=ONE)
    else:
        inner = inner.fold_rational()
    n = min(outer.order, inner.order) + 1
    x = inner.coeffs[:n]
    acc = [Fraction(0)] * n
    for c in reversed(outer.coeffs[:n]):
        acc = _cauchy(acc, x, n)
        acc[0] += c
    return TruncatedSeries(tuple(acc), inner.variable, outer.prefactor,
                           outer.exact and inner.exact)


_SWAP = {"g": "dE", "dE": "g", "rho": "g"}


def revert(a: TruncatedSeries, variable: str | None = None) -> TruncatedSeries:
    """Compositional inverse of a series with ``a_0 = 0`` and ``a_1 != 0``.

    The output variable defaults to the conventional swap (``g`` -> ``dE``).
    """
    if not a.prefactor.is_rational():
        raise PrefactorMismatch(
            "reversion of a series with an irrational prefactor has no single prefactor")
    if a.prefactor.rational != 1:
        a = a.fold_rational()
    c = a.coeffs
    if c[0] != 0:
        raise NonzeroInnerConstant("revert needs zero constant term (subtract E0 first)")
    if a.order < 1 or c[1] == 0:
        raise ZeroLinearTerm("linear coefficient is zero; reversion undefined")
    N = a.order
    # h = x / a(x), known through order N-1
    h = reciprocal(TruncatedSeries(c[1:], a.variable)).coeffs
    b = [Fraction(0)] * (N + 1)
    power = [Fraction(1)] + [Fraction(0)] * (N - 1)
    for n in range(1, N + 1):
        power = _cauchy(power, h, N)
        b[n] = power[n - 1] / n
    var = variable if variable is not None else _SWAP.get(a.variable, "g")
    return TruncatedSeries(tuple(b), var, ONE, a.exact)


def normalize_to_rho(E_series: TruncatedSeries) -> TruncatedSeries:
    """The series of ``g`` in ``rho = (E - E0)/E1``.

    The common prefactor of the ``E_j`` cancels, so the result is purely
    rational with unit linear coefficient.
    """
    c = E_series.coeffs
    if E_series.order < 1 or c[1] == 0:
        raise ZeroLinearTerm("E1 = 0: the rho parameter is undefined")
    e1 = c[1]
    rho_of_g = TruncatedSeries((Fraction(0),) + tuple(x / e1 for x in c[1:]),
                               E_series.variable, ONE, E_series.exact)
    return revert(rho_of_g, variable="rho").with_variable("rho")


def parametric_constants(E_series: TruncatedSeries) -> tuple:
    """``(E0, E1)`` as exact :class:`Prefactor` values."""
    pf = E_series.prefactor
    return pf * E_series.coeffs[0], pf * E_series.coeffs[1]


def differentiate(a: TruncatedSeries) -> TruncatedSeries:
    if a.order == 0:
        return a._replace([0])
    return a._replace([j * c for j, c in enumerate(a.coeffs) if j > 0])


def evaluate(a: TruncatedSeries, x):
    """Horner evaluation of the partial sum.

    Exact (a Fraction) when ``x`` is rational and the prefactor carries no
    power of pi; a float otherwise.
    """
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool) and a.prefactor.is_rational():
        acc = Fraction(0)
        for c in reversed(a.coeffs):
            acc = acc * x + c
        return acc * a.prefactor.rational
    xf = float(x)
    acc = 0.0
    for c in reversed(a.coeffs):
        acc = acc * xf + float(c)
    return acc * a.prefactor.value
