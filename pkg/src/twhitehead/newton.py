"""Newton polygons of two-variable polynomials in M, L."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polyring import VAR_INDEX, LaurentPoly, PolyError

VERTICAL = math.inf


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, int], ...]
    slopes: tuple  # sorted distinct Fractions, VERTICAL last

    @property
    def n_sides(self) -> int:
        if len(self.vertices) < 2:
            return 0
        return 1 if len(self.vertices) == 2 else len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "slopes": [slope_str(s) for s in self.slopes],
        }


def slope_str(s) -> str:
    return "inf" if s == VERTICAL else str(s)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[tuple[int, int]]:
    """Andrew's monotone chain; counterclockwise, collinear points dropped,
    starting from the lexicographically smallest point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def support(p: LaurentPoly, hvar: str = "M", vvar: str = "L") -> list[tuple[int, int]]:
    extra = set(p.variables()) - {hvar, vvar}
    if extra:
        raise PolyError(f"Newton polygon needs a polynomial in {hvar}, {vvar}; found {sorted(extra)}")
    i, j = VAR_INDEX[hvar], VAR_INDEX[vvar]
    return [(e[i], e[j]) for e, _ in p.items()]


def newton_polygon(p: LaurentPoly, hvar: str = "M", vvar: str = "L") -> NewtonPolygon:
    """Convex hull of the exponent support; slopes are d(L-exponent)/d(M-exponent)."""
    if p.is_zero():
        raise PolyError("Newton polygon of the zero polynomial")
    hull = convex_hull(support(p, hvar, vvar))
    slopes = set()
    for a, b in zip(hull, hull[1:] + hull[:1]):
        if a == b:
            continue
        dx, dy = b[0] - a[0], b[1] - a[1]
        slopes.add(VERTICAL if dx == 0 else Fraction(dy, dx))
    return NewtonPolygon(tuple(hull), tuple(sorted(slopes)))


def has_two_slopes(p: LaurentPoly) -> bool:
    """At least three monomials and two distinct boundary slopes."""
    return len(p) >= 3 and len(newton_polygon(p).slopes) >= 2
