"""Exact rational, polynomial and truncated power-series arithmetic.

Rationals are :class:`fractions.Fraction`; everything here is exact and
immutable.  Bernoulli numbers follow the convention ``B_1 = -1/2``, which is
the only sign that gives ``beta(-1) == -2`` in :mod:`eulerfaces.coefficients`.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Polynomial",
    "TruncatedSeries",
    "binomial",
    "bernoulli",
    "poly_affine_substitute",
    "reversed_with_leading",
    "cosh_series",
    "neg_z_over_cosh_series",
    "format_rational",
]

Rational = Fraction
Number = Union[int, Fraction]


def format_rational(x: Number) -> str:
    """Render ``x`` as ``"p/q"``, or as a bare integer when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


_bernoulli_lock = threading.Lock()
_bernoulli_memo: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number ``B_n`` with ``B_1 = -1/2``.

    Uses ``sum_{k=0}^{m} C(m+1, k) B_k = 0`` (m >= 1) over exact rationals.
    Values are memoized in a process-wide table guarded by a lock.
    """
    if n < 0:
        raise ValueError(f"bernoulli: n must be >= 0, got {n}")
    memo = _bernoulli_memo
    if n < len(memo):
        return memo[n]
    with _bernoulli_lock:
        while len(memo) <= n:
            m = len(memo)
            if m >= 3 and m % 2 == 1:
                memo.append(Fraction(0))
                continue
            s = sum((math.comb(m + 1, k) * memo[k] for k in range(m)), Fraction(0))
            memo.append(-s / (m + 1))
    return memo[n]


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coefficients[k]`` is the coefficient of ``z**k``.  Trailing zeros are
    stripped, so the zero polynomial has no coefficients and degree ``-1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        c = [Fraction(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, n: int, coefficient: Number = 1) -> "Polynomial":
        if n < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls([0] * n + [coefficient])

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls([c])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._c):
            return self._c[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Polynomial({[format_rational(a) for a in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = format_rational(abs(a)) + (f"*{mono}" if mono else "")
            terms.append(("-" if a < 0 else "+", body))
        sign, first = terms[0]
        out = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other: object) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        n = max(len(self._c), len(o._c))
        return Polynomial(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-a for a in self._c)

    def __sub__(self, other: object) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: object) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "Polynomial":
        o = self._coerce(other)
        if not self._c or not o._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(o._c):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_even(self) -> bool:
        """True when only even powers of ``z`` occur."""
        return all(a == 0 for a in self._c[1::2])


def poly_affine_substitute(p: Polynomial, a: Number, b: Number) -> Polynomial:
    """Return ``q`` with ``q(z) == p(a*z + b)``, by Horner's scheme on polynomials."""
    lin = Polynomial([b, a])
    acc = Polynomial()
    for c in reversed(p.coefficients):
        acc = acc * lin + c
    return acc


def reversed_with_leading(p: Polynomial, d: int) -> Polynomial:
    """Return ``z**(d+1) * p(1/z)``, i.e. the coefficients read back to front."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if p.degree > d + 1:
        raise ValueError(f"degree {p.degree} exceeds d + 1 = {d + 1}")
    return Polynomial(p.coeff(d + 1 - k) for k in range(d + 2))


class TruncatedSeries:
    """Power series known up to ``z**order``."""

    __slots__ = ("_c", "_order")

    def __init__(self, coefficients: Sequence[Number], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = [Fraction(a) for a in coefficients[: order + 1]]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self._c = tuple(c)
        self._order = order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def order(self) -> int:
        return self._order

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self._order:
            raise IndexError(f"coefficient {k} outside truncation order {self._order}")
        return self._c[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self._order, self._c))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[format_rational(a) for a in self._c]}, order={self._order})"

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self._order, other._order)
        out = [
            sum((self._c[i] * other._c[k - i] for i in range(k + 1)), Fraction(0))
            for k in range(n + 1)
        ]
        return TruncatedSeries(out, n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if other._c[0] == 0:
            raise ZeroDivisionError("series division needs a nonzero constant term")
        n = min(self._order, other._order)
        q: list[Fraction] = []
        for k in range(n + 1):
            s = self._c[k] - sum((other._c[j] * q[k - j] for j in range(1, k + 1)), Fraction(0))
            q.append(s / other._c[0])
        return TruncatedSeries(q, n)


def cosh_series(order: int) -> TruncatedSeries:
    return TruncatedSeries(
        [Fraction(1, math.factorial(k)) if k % 2 == 0 else 0 for k in range(order + 1)],
        order,
    )


def neg_z_over_cosh_series(order: int) -> TruncatedSeries:
    """Taylor coefficients of ``-z / cosh z`` through ``z**order`` by long division."""
    if order < 0:
        raise ValueError("order must be >= 0")
    numerator = TruncatedSeries([0, -1], order)
    return numerator / cosh_series(order)
