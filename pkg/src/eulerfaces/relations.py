"""h-vectors, Dehn-Sommerville relations and the antisymmetry of the face polynomial."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactmath import (
    Polynomial,
    binomial,
    format_rational,
    poly_affine_substitute,
)
from .simplicial import (
    FVector,
    SimplicialComplex,
    boundary,
    euler_classical,
    f_vector,
    is_pure,
    link_euler_characteristics,
)

__all__ = [
    "HVector",
    "CheckItem",
    "CheckReport",
    "f_polynomial",
    "h_vector",
    "sphere_euler",
    "check_dehn_sommerville",
    "lemma1_polynomial",
    "check_lemma1",
    "is_semi_eulerian",
    "check_boundary_links",
    "MAX_LISTED_FAILURES",
]

MAX_LISTED_FAILURES = 100


@dataclass(frozen=True)
class HVector:
    dimension: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.dimension + 2:
            raise ValueError("h-vector needs d + 2 entries")

    def __getitem__(self, n: int) -> int:
        return self.entries[n]


@dataclass(frozen=True)
class CheckItem:
    description: str
    expected: Fraction
    actual: Fraction
    ok: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "description": self.description,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
            "ok": self.ok,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckItem":
        return cls(d["description"], Fraction(d["expected"]), Fraction(d["actual"]), bool(d["ok"]))


@dataclass
class CheckReport:
    """Outcome of one identity check; ``passed`` is the conjunction of the items."""

    name: str
    items: list[CheckItem] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    passed: bool = True

    def add(self, description: str, expected: Any, actual: Any) -> bool:
        expected, actual = Fraction(expected), Fraction(actual)
        ok = expected == actual
        self.items.append(CheckItem(description, expected, actual, ok))
        self.passed = self.passed and ok
        return ok

    def fail(self, note: str) -> None:
        self.notes.append(note)
        self.passed = False

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "items": [it.to_dict() for it in self.items],
        }
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "CheckReport":
        return cls(
            name=d["name"],
            items=[CheckItem.from_dict(it) for it in d["items"]],
            notes=list(d.get("notes", [])),
            passed=bool(d["passed"]),
        )

    def summary(self) -> str:
        bad = sum(not it.ok for it in self.items)
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {verdict} ({len(self.items) - bad}/{len(self.items)} items hold)"


def sphere_euler(d: int) -> int:
    return 1 + (-1) ** d


def f_polynomial(fv: FVector) -> Polynomial:
    """``F(x) = x**(d+1) + sum_n f_n x**(d-n)``."""
    d = fv.dimension
    coeffs = [0] * (d + 2)
    coeffs[d + 1] = 1
    for n, f in enumerate(fv):
        coeffs[d - n] = f
    return Polynomial(coeffs)


def h_vector(fv: FVector) -> HVector:
    d = fv.dimension
    shifted = poly_affine_substitute(f_polynomial(fv), 1, -1)
    entries = []
    for n in range(d + 2):
        c = shifted.coeff(d + 1 - n)
        assert c.denominator == 1
        entries.append(int(c))
    return HVector(d, tuple(entries))


def check_dehn_sommerville(C: SimplicialComplex) -> CheckReport:
    """``h_{d+1-n} - h_n == (-1)**n C(d+1, n) (chi - chi(S^d))`` for ``0 <= n <= d+1``."""
    report = CheckReport("dehn-sommerville")
    fv = f_vector(C)
    d = fv.dimension
    if d < 0:
        report.fail("empty complex")
        return report
    h = h_vector(fv)
    excess = euler_classical(C) - sphere_euler(d)
    for n in range(d + 2):
        report.add(
            f"h[{d + 1 - n}] - h[{n}] = (-1)^{n} C({d + 1},{n}) (chi - {sphere_euler(d)})",
            (-1) ** n * binomial(d + 1, n) * excess,
            h[d + 1 - n] - h[n],
        )
    return report


def lemma1_polynomial(C: SimplicialComplex, chi: Fraction | int | None = None) -> Polynomial:
    """``chi/2 + sum_n f_n z**(n+1)``; ``chi`` defaults to the classical Euler characteristic."""
    if chi is None:
        chi = euler_classical(C)
    return Polynomial([Fraction(chi) / 2] + list(f_vector(C)))


def check_lemma1(C: SimplicialComplex) -> CheckReport:
    """Exact identity ``p(z) + (-1)**d p(-1-z) == 0``, one item per coefficient."""
    report = CheckReport("face-polynomial-antisymmetry")
    d = C.dimension
    if d < 0:
        report.fail("empty complex")
        return report
    p = lemma1_polynomial(C)
    total = p + poly_affine_substitute(p, -1, -1) * (-1) ** d
    for k in range(d + 2):
        report.add(f"coefficient of z^{k} in p(z) + (-1)^{d} p(-1-z)", 0, total.coeff(k))
    return report


def is_semi_eulerian(C: SimplicialComplex) -> CheckReport:
    """Pure, and every ``n``-face has link Euler characteristic ``1 - (-1)**(d+n)``.

    The empty face is not tested.  At most ``MAX_LISTED_FAILURES`` failing
    faces are itemized; the total count goes into the notes.
    """
    report = CheckReport("semi-eulerian")
    if C.is_empty():
        report.fail("empty complex")
        return report
    if not is_pure(C):
        report.fail("complex is not pure")
        return report
    d = C.dimension
    failures = 0
    for face, chi in link_euler_characteristics(C).items():
        n = len(face) - 1
        want = 1 - (-1) ** (d + n)
        if chi != want:
            failures += 1
            if failures <= MAX_LISTED_FAILURES:
                report.add(f"chi(link {list(face)})", want, chi)
    if failures:
        report.passed = False
        report.notes.append(f"{failures} face(s) with wrong link Euler characteristic")
    else:
        report.add(f"all {len(C.faces())} face links have sphere Euler characteristic", 0, 0)
    return report


def check_boundary_links(C: SimplicialComplex) -> CheckReport:
    """Link test for a manifold with boundary.

    Faces off the boundary need the sphere value ``1 - (-1)**(d+n)``; faces
    on the boundary need 1, the Euler characteristic of a ball.
    """
    report = CheckReport("semi-eulerian-with-boundary")
    if C.is_empty() or C.dimension < 1 or not is_pure(C):
        report.fail("needs a pure complex of dimension >= 1")
        return report
    d = C.dimension
    B = boundary(C)
    failures = 0
    for face, chi in link_euler_characteristics(C).items():
        n = len(face) - 1
        want = 1 if face in B else 1 - (-1) ** (d + n)
        if chi != want:
            failures += 1
            if failures <= MAX_LISTED_FAILURES:
                report.add(f"chi(link {list(face)})", want, chi)
    if failures:
        report.passed = False
        report.notes.append(f"{failures} face(s) with wrong link Euler characteristic")
    else:
        report.add(f"all {len(C.faces())} face links have sphere or ball Euler characteristic", 0, 0)
    return report
