"""
The A-polynomial 2-tuple of the twisted Whitehead link W_k.

Two routes are provided: the closed binomial sums (``apoly_closed_form``)
and an elimination oracle that starts from the canonical-component
polynomial in trace coordinates, restricts to the boundary of the other
component, and eliminates z with a resultant (``elimination_oracle``).
``numeric_witness`` checks the closed form against actual numerical
representations built from the group word.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .newton import NewtonPolygon, has_two_slopes, newton_polygon
from .polyring import (
    VAR_INDEX,
    ZERO,
    LaurentPoly,
    PolyError,
    binomial,
    equal_up_to_unit,
    eval_complex,
    numeric_coefficients,
    primitive_part,
    resultant,
    squarefree_part,
    substitute,
    variables,
)
from .riley import (
    NotHyperbolicError,
    TwistedWhitehead,
    build_word,
    canonical_poly,
    noncanonical_v_roots,
    rho_numeric,
    to_uform,
)
from .roots import polish_roots

M, L = variables("M L")


@dataclass
class APolyTuple:
    k: int
    a1: LaurentPoly
    a2: LaurentPoly
    nonhyp_factor: LaurentPoly
    canonical_factor: LaurentPoly

    def newton_polygon(self) -> NewtonPolygon:
        return newton_polygon(self.canonical_factor)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "A1": self.a1.to_json(),
            "A2": self.a2.to_json(),
            "nonhyp_factor": self.nonhyp_factor.to_json(),
            "canonical_factor": self.canonical_factor.to_json(),
            "newton_polygon": self.newton_polygon().to_json(),
        }


def _check_k(k: int) -> TwistedWhitehead:
    spec = TwistedWhitehead(k)
    if k == 0:
        raise NotHyperbolicError("W_0 is not hyperbolic; no A-polynomial computed")
    return spec


# binomial coefficients of the two sums -------------------------------

def f_even_coeffs(n: int) -> list[int]:
    """C(n+1+i, 2i+1) - C(n-1+i, 2i+1), i = 0..n."""
    return [binomial(n + 1 + i, 2 * i + 1) - binomial(n - 1 + i, 2 * i + 1) for i in range(n + 1)]


def f_odd_coeffs(n: int) -> list[int]:
    """C(n+i, 2i+1), i = 0..n-1."""
    return [binomial(n + i, 2 * i + 1) for i in range(n)]


def g_odd_coeffs(n: int) -> list[int]:
    """C(n+1+i, 2i+1) + C(n+i, 2i+1), i = 0..n (odd powers of the ratio)."""
    return [binomial(n + 1 + i, 2 * i + 1) + binomial(n + i, 2 * i + 1) for i in range(n + 1)]


def g_even_coeffs(n: int) -> list[int]:
    """C(n+i, 2i), i = 0..n (even powers of the ratio)."""
    return [binomial(n + i, 2 * i) for i in range(n + 1)]


def f_cleared(n: int) -> LaurentPoly:
    """M^(2n) (L+1)^(2n) F(M, L)."""
    mm = M - M ** -1
    mp = M + M ** -1
    top, bot = L - 1, L + 1
    total = ZERO
    for i, c in enumerate(f_even_coeffs(n)):
        if c:
            total += c * mm ** (2 * i) * top ** (2 * i) * bot ** (2 * n - 2 * i)
    for i, c in enumerate(f_odd_coeffs(n)):
        if c:
            total += c * mp * mm ** (2 * i + 1) * top ** (2 * i + 1) * bot ** (2 * n - 2 * i - 1)
    return (total * M ** (2 * n))


def g_cleared(n: int) -> LaurentPoly:
    """M^(2n+1) (LM^2+1)^(2n+1) G(M, L)."""
    mm = M - M ** -1
    mp = M + M ** -1
    top, bot = L * M ** 2 - 1, L * M ** 2 + 1
    e = 2 * n + 1
    total = ZERO
    for i, c in enumerate(g_odd_coeffs(n)):
        if c:
            total += c * mm ** (2 * i + 1) * top ** (2 * i + 1) * bot ** (e - 2 * i - 1)
    for i, c in enumerate(g_even_coeffs(n)):
        if c:
            total += c * mp * mm ** (2 * i) * top ** (2 * i) * bot ** (e - 2 * i)
    return total * M ** e


@lru_cache(maxsize=None)
def apoly_closed_form(k: int) -> APolyTuple:
    spec = _check_k(k)
    n = spec.n
    if spec.odd:
        canonical = primitive_part(f_cleared(n))
        nonhyp = L - 1
    else:
        canonical = primitive_part(g_cleared(n))
        nonhyp = L * M ** 2 - 1
    a1 = primitive_part(nonhyp * canonical)
    return APolyTuple(k, a1, a1, nonhyp, canonical)


def canonical_factor(k: int) -> LaurentPoly:
    return apoly_closed_form(k).canonical_factor


# elimination oracle ----------------------------------------------------

# binomial factors that come from the abelian / boundary branches; none of
# them can be the canonical factor, which has at least three monomials
BINOMIAL_FACTORS = (L - 1, L + 1, M - 1, M + 1, L * M ** 2 - 1, L * M ** 2 + 1)


def linking_number(k: int) -> int:
    """lk of the two components of W_k: the b-exponent sum of w a^-1."""
    letters = build_word(TwistedWhitehead(k)).letters()
    return letters.count("b") - letters.count("B")


def _framing_shift(k: int, framing: str) -> int:
    if framing == "preferred":
        return 0
    if framing == "total":
        return linking_number(k)
    raise ValueError(f"unknown framing {framing!r}")


def oracle_equations(k: int, component: str = "a", sign: int = 1,
                     framing: str = "preferred") -> tuple[LaurentPoly, LaurentPoly]:
    """(P1, P2) in z, M, L.

    For component ``a``: s1 = M, s2 = sign, P1 is the canonical polynomial
    at x = M + 1/M, y = 2 sign, and P2 clears L = w11 / s1 with
    w11 = (-1 - s2^2 + s1 s2 z) / (s1 + s1 s2^2 - s2 z).  Component ``b``
    swaps the roles of the two meridians and uses the conjugate formula.

    ``framing="preferred"`` uses the longitude w a^-1 (zero linking with its
    own component).  ``framing="total"`` uses w a^-1 a^-lk instead, whose
    eigenvalue is L M^-lk; this is the convention in which the closed form
    for even k holds.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    z = variables("z")[0]
    spec = _check_k(k)
    meridian = M + M ** -1
    boundary = 2 * sign
    if component == "a":
        bind = {"x": meridian, "y": boundary}
        s_m, s_o = M, sign
        num = -1 - s_o * s_o + s_m * s_o * z
        den = s_m + s_m * s_o * s_o - s_o * z
    elif component == "b":
        bind = {"x": boundary, "y": meridian}
        s_o, s_m = sign, M
        num = -1 - s_o * s_o + s_o * s_m * z
        den = s_m + s_o * s_o * s_m - s_o * z
    else:
        raise ValueError("component must be 'a' or 'b'")
    p1 = substitute(canonical_poly(spec), bind).to_poly()
    p2 = L * M ** (1 + _framing_shift(k, framing)) * den - num
    return p1, p2


def elimination_oracle_raw(k: int, component: str = "a", sign: int = 1,
                           framing: str = "preferred") -> LaurentPoly:
    p1, p2 = oracle_equations(k, component, sign, framing)
    res = resultant(p1, p2, "z")
    if res.is_zero():
        raise PolyError(f"resultant vanished identically for k={k}, component {component}")
    return primitive_part(res)


def strip_binomial_factors(p: LaurentPoly) -> tuple[LaurentPoly, dict[str, int]]:
    removed = {}
    for f in BINOMIAL_FACTORS:
        count = 0
        while len(p) > 1:
            try:
                p = p.exact_div(f)
            except PolyError:
                break
            count += 1
        if count:
            removed[str(f)] = count
    return p, removed


def elimination_oracle(k: int, component: str = "a", sign: int = 1,
                       framing: str = "preferred") -> LaurentPoly:
    """Squarefree primitive part of the resultant with the binomial
    (abelian/boundary) factors removed."""
    raw = elimination_oracle_raw(k, component, sign, framing)
    stripped, _ = strip_binomial_factors(raw)
    return squarefree_part(stripped)


def oracle_agrees(k: int, component: str = "a", sign: int = 1,
                  framing: str = "preferred") -> bool:
    c = canonical_factor(k)
    raw = elimination_oracle_raw(k, component, sign, framing)
    return c.divides(raw) and elimination_oracle(k, component, sign, framing) == c


# Newton polygon / canonical check ------------------------------------

def canonical_check(k_or_poly) -> bool:
    """At least three monomials and two distinct Newton polygon slopes."""
    p = canonical_factor(k_or_poly) if isinstance(k_or_poly, int) else k_or_poly
    return has_two_slopes(p)


def reciprocal(p: LaurentPoly) -> LaurentPoly:
    """p(1/M, 1/L)."""
    return substitute(p, {"M": M ** -1, "L": L ** -1}).to_poly()


def is_reciprocal(p: LaurentPoly) -> bool:
    return equal_up_to_unit(reciprocal(p), p)


# numeric witnesses -----------------------------------------------------

@dataclass
class WitnessReport:
    k: int
    trials: int
    canonical_residuals: list[float] = field(default_factory=list)
    noncanonical_residuals: list[float] = field(default_factory=list)
    w21_residuals: list[float] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def max_canonical(self) -> float:
        return max(self.canonical_residuals, default=0.0)

    @property
    def max_noncanonical(self) -> float:
        return max(self.noncanonical_residuals, default=0.0)

    def ok(self, tol: float = 1e-8) -> bool:
        return (not self.failures and self.max_canonical < tol
                and self.max_noncanonical < tol)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "trials": self.trials,
            "max_canonical_residual": self.max_canonical,
            "max_noncanonical_residual": self.max_noncanonical,
            "max_w21": max(self.w21_residuals, default=0.0),
            "failures": self.failures,
        }


@lru_cache(maxsize=None)
def _canonical_uform(k: int) -> LaurentPoly:
    return to_uform(canonical_poly(k))


def normalized_residual(p: LaurentPoly, point: dict) -> float:
    """|p(point)| divided by the largest monomial magnitude."""
    names = p.variables()
    idx = [VAR_INDEX[n] for n in names]
    scale = max(
        abs(c) * math.prod(abs(point[n]) ** e[i] for n, i in zip(names, idx))
        for e, c in p.items()
    )
    return abs(eval_complex(p, point)) / scale


def _random_s1(rng: np.random.Generator, trial: int) -> complex:
    theta = rng.uniform(0.3, math.pi - 0.3)
    if trial % 2 == 0:
        return cmath.exp(1j * theta)
    r = rng.uniform(0.5, 2.0)
    return r * cmath.exp(1j * theta)


def longitude_eigenvalue(k: int, s1v: complex, s2v: complex, uv: complex,
                         framing: str = "preferred") -> tuple[complex, complex]:
    """(L, w21) with L the (1,1) entry of rho(w a^-1) (times M^-lk for the
    ``total`` framing)."""
    word = build_word(TwistedWhitehead(k)).letters() + "A"
    m = rho_numeric(word, s1v, s2v, uv)
    # rho(w a^-1) is upper triangular with det 1, so m11 = 1/m22; take
    # whichever diagonal entry is larger to keep relative accuracy
    lam = m[0, 0] if abs(m[0, 0]) >= abs(m[1, 1]) else 1 / m[1, 1]
    return lam * s1v ** -_framing_shift(k, framing), m[1, 0]


def numeric_witness(k: int, trials: int = 20, seed: int = 0,
                    framing: str = "preferred") -> WitnessReport:
    """Evaluate the A-polynomial on numerically constructed representations.

    Canonical component: roots u of the canonical polynomial at random s1
    and s2 = ±1.  Non-canonical components: u solving v(u) = v0 for each
    root v0 of the non-canonical factor; there L = 1 (k odd) or L M^2 = 1
    (k even).
    """
    spec = _check_k(k)
    rng = np.random.default_rng(seed)
    report = WitnessReport(k, trials)
    a1 = apoly_closed_form(k).a1
    cu = _canonical_uform(k)
    v_roots = noncanonical_v_roots(k)
    for trial in range(trials):
        s1v = _random_s1(rng, trial)
        s2v = 1.0 if trial % 4 < 2 else -1.0
        point = {"s1": s1v, "s2": s2v}
        coeffs = np.array(numeric_coefficients(cu, "u", point))
        try:
            us = polish_roots(coeffs)
        except ArithmeticError as exc:
            report.failures.append(f"trial {trial}: {exc}")
            continue
        shift = cu.min_degree("u")
        if shift > 0:
            us = np.concatenate([us, np.zeros(shift)])
        for uv in us:
            if abs(uv) < 1e-12:
                continue  # u = 0 is an abelian representation
            Lv, w21 = longitude_eigenvalue(k, s1v, s2v, uv, framing)
            report.w21_residuals.append(abs(w21))
            report.canonical_residuals.append(normalized_residual(a1, {"M": s1v, "L": Lv}))
        for v0 in v_roots:
            # v = u (u + s1 s2 + 1/(s1 s2) - s1/s2 - s2/s1) + 2
            b = s1v * s2v + 1 / (s1v * s2v) - s1v / s2v - s2v / s1v
            for uv in np.roots([1, b, 2 - v0]):
                Lv, _ = longitude_eigenvalue(k, s1v, s2v, uv, framing)
                if spec.odd:
                    report.noncanonical_residuals.append(abs(Lv - 1))
                else:
                    report.noncanonical_residuals.append(abs(Lv * s1v ** 2 - 1))
    return report
