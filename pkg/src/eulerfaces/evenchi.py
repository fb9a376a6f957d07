"""Euler characteristic from even-dimensional face counts.

For a semi-Eulerian complex of even dimension ``d``::

    chi = sum_{n=0}^{d} beta(n) * f_n = f_0 - f_2/2 + f_4 - 17/4 f_6 + ...

(odd ``beta`` vanish).  For a manifold with boundary, ``f_n`` is replaced by
``f_n(M) - f_n(boundary)/2``.  Neither function checks the hypothesis; use
:func:`eulerfaces.relations.is_semi_eulerian` for that.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .coefficients import beta
from .exactmath import format_rational
from .simplicial import (
    FVector,
    SimplicialComplex,
    boundary,
    euler_classical,
    f_vector,
    is_pure,
)

__all__ = [
    "EulerComparison",
    "euler_even_from_fvector",
    "euler_even",
    "euler_with_boundary",
    "cross_validate",
]


def _require_even(d: int) -> None:
    if d < 0 or d % 2:
        raise ValueError(
            f"dimension {d} is not even; closed odd-dimensional manifolds have Euler characteristic 0"
        )


def euler_even_from_fvector(fv: FVector) -> Fraction:
    _require_even(fv.dimension)
    return sum((beta(n) * f for n, f in enumerate(fv) if n % 2 == 0), Fraction(0))


def euler_even(C: SimplicialComplex) -> Fraction:
    return euler_even_from_fvector(f_vector(C))


def euler_with_boundary(M: SimplicialComplex) -> Fraction:
    d = M.dimension
    _require_even(d)
    if not is_pure(M):
        raise ValueError("euler_with_boundary needs a pure complex")
    fm = f_vector(M)
    fb = f_vector(boundary(M)) if d >= 1 else FVector(())
    return sum((beta(n) * (fm[n] - Fraction(fb[n], 2)) for n in range(d + 1)), Fraction(0))


@dataclass(frozen=True)
class EulerComparison:
    classical: int
    even_formula: Fraction | None = None
    boundary_formula: Fraction | None = None

    @property
    def agree(self) -> bool:
        return all(v == self.classical for v in (self.even_formula, self.boundary_formula) if v is not None)

    def to_dict(self) -> dict[str, Any]:
        def fmt(x: Fraction | None) -> str | None:
            return None if x is None else format_rational(x)

        return {
            "classical": self.classical,
            "even_formula": fmt(self.even_formula),
            "boundary_formula": fmt(self.boundary_formula),
            "agree": self.agree,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "EulerComparison":
        def parse(x: str | None) -> Fraction | None:
            return None if x is None else Fraction(x)

        return cls(int(d["classical"]), parse(d["even_formula"]), parse(d["boundary_formula"]))


def cross_validate(C: SimplicialComplex) -> EulerComparison:
    """Classical Euler characteristic beside whichever even formula applies."""
    chi = euler_classical(C)
    d = C.dimension
    if d < 0 or d % 2:
        return EulerComparison(chi)
    if d == 0 or not is_pure(C):
        return EulerComparison(chi, even_formula=euler_even(C))
    if boundary(C).is_empty():
        return EulerComparison(chi, even_formula=euler_even(C))
    return EulerComparison(chi, boundary_formula=euler_with_boundary(C))
