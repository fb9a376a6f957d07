"""The beta coefficients, the functional ``theta`` and the odd/even splitting.

``beta(n) = 4 * (2**(n+2) - 1) * B_{n+2} / (n+2)`` for ``n >= -1``.  The same
table serves every dimension; :func:`beta` takes no dimension argument.

``theta`` is the linear functional on polynomials with ``theta(z**n) =
beta(n-1)``.  It kills every ``p`` with ``p(z) + p(-1-z) == 0`` and sends a
polynomial ``q`` in even powers of ``z`` to ``-2*q(0)``.  "Even" here means
only even powers of ``z``; the reading "symmetric under ``z -> -1-z``" is
wrong, since ``q = z**2 + z`` would then give ``theta(q) = -1/2 != 0``.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from .exactmath import Polynomial, bernoulli, poly_affine_substitute

__all__ = [
    "BetaTable",
    "beta",
    "beta_table",
    "theta",
    "decompose",
    "is_antisymmetric",
    "s_m_sum",
]

_beta_lock = threading.Lock()
_beta_memo: dict[int, Fraction] = {}


def beta(n: int) -> Fraction:
    if n < -1:
        raise ValueError(f"beta is defined for n >= -1, got {n}")
    try:
        return _beta_memo[n]
    except KeyError:
        pass
    k = n + 2
    value = Fraction(4 * (2**k - 1)) * bernoulli(k) / k
    with _beta_lock:
        _beta_memo[n] = value
    return value


class BetaTable:
    """Read-only view ``n -> beta(n)`` for ``-1 <= n <= max_n``."""

    def __init__(self, max_n: int):
        if max_n < -1:
            raise ValueError(f"max_n must be >= -1, got {max_n}")
        self.max_n = max_n
        self.values = {n: beta(n) for n in range(-1, max_n + 1)}

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __iter__(self):
        return iter(self.values.items())

    def __len__(self) -> int:
        return len(self.values)


def beta_table(max_n: int) -> BetaTable:
    return BetaTable(max_n)


def theta(p: Polynomial) -> Fraction:
    return sum((c * beta(k - 1) for k, c in enumerate(p.coefficients) if c), Fraction(0))


def is_antisymmetric(p: Polynomial) -> bool:
    """True iff ``p(z) + p(-1-z)`` is the zero polynomial."""
    return (p + poly_affine_substitute(p, -1, -1)).is_zero()


def decompose(P: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Split ``P = p + q`` with ``p`` antisymmetric about ``-1/2`` and ``q`` even.

    Peels off the leading term: an odd degree ``m`` goes to ``p`` as a
    multiple of ``(1+2z)**m``, an even degree goes to ``q`` as a monomial.
    """
    rest = P
    p = Polynomial()
    q = Polynomial()
    while not rest.is_zero():
        m = rest.degree
        c = rest.coefficients[-1]
        if m % 2:
            term = Polynomial([1, 2]) ** m * (c / 2**m)
            p = p + term
        else:
            term = Polynomial.monomial(m, c)
            q = q + term
        rest = rest - term
    return p, q


def s_m_sum(m: int) -> Fraction:
    """Finite sum ``sum_{n=1}^{m+1} (4**n - 2**n) B_n / (n! (m+1-n)!)`` for odd ``m``."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be a positive odd integer, got {m}")
    return sum(
        (
            Fraction((4**n - 2**n) * bernoulli(n))
            / (math.factorial(n) * math.factorial(m + 1 - n))
            for n in range(1, m + 2)
        ),
        Fraction(0),
    )
