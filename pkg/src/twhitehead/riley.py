"""
Two-bridge link groups, the representation rho into SL(2, C[u, s1^±, s2^±]),
and Riley polynomials of twisted Whitehead links.

Letters are written ``a, b`` and their inverses ``A, B``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

import numpy as np

from .chebyshev import cheb, mat_power
from .matrix import Mat2
from .polyring import (
    ONE,
    LaurentPoly,
    PolyError,
    equal_up_to_unit,
    primitive_part,
    substitute,
    variables,
)

u, s1, s2 = variables("u s1 s2")
x, y, z = variables("x y z")

INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


class NotHyperbolicError(ValueError):
    """W_0 (the torus link T(2,4)) has no hyperbolic structure."""


# ----------------------------------------------------------------------
# link specifications


@dataclass(frozen=True)
class TwistedWhitehead:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"twist parameter must be a non-negative integer, got {self.k!r}")

    @property
    def n(self) -> int:
        """k = 2n - 1 (odd) or k = 2n (even)."""
        return (self.k + 1) // 2 if self.k % 2 else self.k // 2

    @property
    def odd(self) -> bool:
        return self.k % 2 == 1

    def to_two_bridge(self) -> "TwoBridge":
        return TwoBridge(4 * self.k + 4, 2 * self.k + 1)


@dataclass(frozen=True)
class TwoBridge:
    two_p: int
    q: int

    def __post_init__(self):
        if self.two_p <= 0 or self.two_p % 2:
            raise ValueError(f"2p must be a positive even integer, got {self.two_p}")
        if self.q % 2 == 0:
            raise ValueError(f"q must be odd, got {self.q}")
        if not self.two_p > abs(self.q) >= 1:
            raise ValueError("need 2p > |q| >= 1")
        if math.gcd(self.two_p, self.q) != 1:
            raise ValueError(f"gcd(2p, q) must be 1 for ({self.two_p}, {self.q})")


LinkSpec = Union[TwistedWhitehead, TwoBridge]


def _as_spec(spec) -> LinkSpec:
    return TwistedWhitehead(spec) if isinstance(spec, int) else spec


# ----------------------------------------------------------------------
# words


@dataclass(frozen=True)
class GroupWord:
    """A word kept as blocks ``(letters, power)`` so powers of repeated
    blocks can use the Chebyshev shortcut."""

    blocks: tuple[tuple[str, int], ...]

    @classmethod
    def from_letters(cls, letters: str) -> "GroupWord":
        return cls(((letters, 1),)) if letters else cls(())

    def letters(self) -> str:
        out = []
        for block, p in self.blocks:
            if p >= 0:
                out.append(block * p)
            else:
                out.append(invert(block) * (-p))
        return "".join(out)

    def reduce(self) -> "GroupWord":
        return GroupWord.from_letters(free_reduce(self.letters()))

    def __len__(self):
        return len(self.letters())

    def __str__(self):
        return " ".join(c if c.islower() else c.lower() + "^-1" for c in self.letters())


def invert(letters: str) -> str:
    return "".join(INVERSE[c] for c in reversed(letters))


def free_reduce(letters: str) -> str:
    out: list[str] = []
    for c in letters:
        if out and out[-1] == INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


COMMUTATOR_C = "baBA"  # c = b a b^-1 a^-1
COMMUTATOR_D = "ABab"  # d = a^-1 b^-1 a b


def epsilons(spec: TwoBridge) -> list[int]:
    """eps_i = (-1)^floor(i q / 2p) for 1 <= i <= 2p - 1."""
    return [(-1) ** ((i * spec.q) // spec.two_p) for i in range(1, spec.two_p)]


def build_word(spec: LinkSpec) -> GroupWord:
    """The word w in the presentation <a, b | aw = wa>."""
    spec = _as_spec(spec)
    if isinstance(spec, TwistedWhitehead):
        n = spec.n
        middle = "a" if spec.odd else "bab"
        blocks = [(COMMUTATOR_C, n), (middle, 1), (COMMUTATOR_D, n)]
        return GroupWord(tuple(b for b in blocks if b[1]))
    eps = epsilons(spec)
    if eps != eps[::-1]:
        raise PolyError(f"epsilon sequence of {spec} is not symmetric")
    letters = []
    for i, e in enumerate(eps, start=1):
        g = "b" if i % 2 else "a"
        letters.append(g if e > 0 else INVERSE[g])
    return GroupWord.from_letters("".join(letters))


def bar_word(word: GroupWord) -> GroupWord:
    """Exchange a and b."""
    swap = str.maketrans("abAB", "baBA")
    return GroupWord(tuple((b.translate(swap), p) for b, p in word.blocks))


# ----------------------------------------------------------------------
# the representation


def letter_matrix(c: str) -> Mat2:
    if c == "a":
        return Mat2(s1, ONE, LaurentPoly(), s1 ** -1)
    if c == "A":
        return Mat2(s1 ** -1, -ONE, LaurentPoly(), s1)
    if c == "b":
        return Mat2(s2, LaurentPoly(), u, s2 ** -1)
    if c == "B":
        return Mat2(s2 ** -1, LaurentPoly(), -u, s2)
    raise ValueError(f"unknown letter {c!r}")


def _product(letters: str) -> Mat2:
    m = Mat2.identity()
    for c in letters:
        m = m * letter_matrix(c)
    return m


def rho(word: GroupWord | str) -> Mat2:
    """Image of a word; powers of blocks go through mat_power."""
    if isinstance(word, str):
        word = GroupWord.from_letters(word)
    m = Mat2.identity()
    for block, p in word.blocks:
        bm = _product(block)
        if p == 1:
            m = m * bm
        elif p:
            m = m * mat_power(bm, p)
    return m


def trace_bindings() -> dict[str, LaurentPoly]:
    """x = tr rho(a), y = tr rho(b), z = tr rho(ab)."""
    return {
        "x": s1 + s1 ** -1,
        "y": s2 + s2 ** -1,
        "z": u + s1 * s2 + s1 ** -1 * s2 ** -1,
    }


def v_trace() -> LaurentPoly:
    """v = tr rho(b a b^-1 a^-1) in (u, s1, s2)."""
    return u * (u + s1 * s2 + s1 ** -1 * s2 ** -1 - s1 * s2 ** -1 - s1 ** -1 * s2) + 2


def v_xyz() -> LaurentPoly:
    return x ** 2 + y ** 2 + z ** 2 - x * y * z - 2


def to_uform(p: LaurentPoly) -> LaurentPoly:
    """Substitute the trace coordinates into a polynomial in x, y, z."""
    return substitute(p, trace_bindings()).to_poly()


@lru_cache(maxsize=None)
def word_matrix(spec: LinkSpec) -> Mat2:
    return rho(build_word(_as_spec(spec)))


def riley_from_matrices(spec: LinkSpec) -> LaurentPoly:
    """w'_21 = (rho(w))_21 / u, computed from the matrices."""
    w21 = word_matrix(_as_spec(spec)).m21
    try:
        return w21.exact_div(u)
    except PolyError as exc:
        raise AssertionError(f"w_21 of {spec} is not divisible by u; word construction bug") from exc


def palindromic_defect(spec: LinkSpec) -> LaurentPoly:
    """r22 - r11 + (s1 - s1^-1) r12 + (s2 - s2^-1) r'21 for r = w.

    Zero for palindromic words of odd length.  Note the sign of the last
    term: with rho(b) lower triangular the single letter ``b`` already gives
    r22 - r11 = s2^-1 - s2 with r'21 = 1.
    """
    return palindromic_defect_word(build_word(_as_spec(spec)))


def palindromic_defect_word(word: GroupWord | str) -> LaurentPoly:
    W = rho(word)
    return W.m22 - W.m11 + (s1 - s1 ** -1) * W.m12 + (s2 - s2 ** -1) * W.m21.exact_div(u)


# ----------------------------------------------------------------------
# closed forms


@dataclass
class RileyData:
    k: int
    riley_xyz: LaurentPoly
    factors: list[LaurentPoly]
    riley_uform: LaurentPoly = field(default=None, repr=False)
    # values of v at which the non-canonical factors vanish
    v_roots: list[float] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "riley_xyz": self.riley_xyz.to_json(),
            "factors": [f.to_json() for f in self.factors],
        }


def _canonical_and_cofactor(spec: TwistedWhitehead, v: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    n = spec.n
    xy = x * y
    if spec.odd:
        canon = (xy - v * z) * cheb(n - 1, v) - (xy - 2 * z) * cheb(n - 2, v)
        cof = cheb(n - 1, v)
    else:
        canon = z * cheb(n, v) - (xy - z) * cheb(n - 1, v)
        cof = cheb(n, v) - cheb(n - 1, v)
    return canon, cof


def noncanonical_v_roots(k: int) -> list[float]:
    """Roots in v of the non-canonical factor: 2cos(j pi / n) for k = 2n-1,
    2cos((2j-1) pi / (2n+1)) for k = 2n."""
    spec = TwistedWhitehead(k)
    n = spec.n
    if spec.odd:
        return [2 * math.cos(j * math.pi / n) for j in range(1, n)]
    return [2 * math.cos((2 * j - 1) * math.pi / (2 * n + 1)) for j in range(1, n + 1)]


def riley_closed_form(spec: TwistedWhitehead | int, with_uform: bool = True) -> RileyData:
    spec = _as_spec(spec)
    canon, cof = _canonical_and_cofactor(spec, v_xyz())
    factors = [canon] if cof == ONE else [canon, cof]
    data = RileyData(spec.k, canon * cof, factors, v_roots=noncanonical_v_roots(spec.k))
    if with_uform:
        data.riley_uform = to_uform(data.riley_xyz)
    return data


def canonical_poly(spec: TwistedWhitehead | int, v: LaurentPoly | None = None) -> LaurentPoly:
    """Polynomial in x, y, z cutting out the canonical component.

    ``v`` may be supplied pre-substituted (e.g. ``2 + t**2``); by default it
    is x^2 + y^2 + z^2 - xyz - 2.
    """
    spec = _as_spec(spec)
    if spec.k == 0:
        raise NotHyperbolicError("W_0 is not hyperbolic")
    return _canonical_and_cofactor(spec, v_xyz() if v is None else v)[0]


def same_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """Equality up to ±(monomial); decided by the leading-term quotient."""
    return equal_up_to_unit(a, b)


def riley_agrees(k: int) -> bool:
    """Matrix route and closed-form route agree up to a unit."""
    mat = riley_from_matrices(TwistedWhitehead(k))
    closed = riley_closed_form(k).riley_uform
    return primitive_part(mat) == primitive_part(closed) and same_up_to_unit(mat, closed)


# ----------------------------------------------------------------------
# numerics


def letter_matrix_numeric(c: str, s1v: complex, s2v: complex, uv: complex) -> np.ndarray:
    if c == "a":
        return np.array([[s1v, 1], [0, 1 / s1v]], dtype=complex)
    if c == "A":
        return np.array([[1 / s1v, -1], [0, s1v]], dtype=complex)
    if c == "b":
        return np.array([[s2v, 0], [uv, 1 / s2v]], dtype=complex)
    if c == "B":
        return np.array([[1 / s2v, 0], [-uv, s2v]], dtype=complex)
    raise ValueError(f"unknown letter {c!r}")


def rho_numeric(word: GroupWord | str, s1v: complex, s2v: complex, uv: complex) -> np.ndarray:
    letters = word if isinstance(word, str) else word.letters()
    m = np.eye(2, dtype=complex)
    for c in letters:
        m = m @ letter_matrix_numeric(c, s1v, s2v, uv)
    return m


def w11_on_canonical(z_val: complex, s1v: complex, s2v: complex) -> complex:
    """(-1 - s2^2 + s1 s2 z) / (s1 + s1 s2^2 - s2 z), the (1,1) entry of
    rho(w) on the canonical component."""
    return (-1 - s2v ** 2 + s1v * s2v * z_val) / (s1v + s1v * s2v ** 2 - s2v * z_val)


def w11_bar_on_canonical(z_val: complex, s1v: complex, s2v: complex) -> complex:
    return (-1 - s1v ** 2 + s1v * s2v * z_val) / (s2v + s1v ** 2 * s2v - s1v * z_val)


__all__ = [
    "TwistedWhitehead", "TwoBridge", "LinkSpec", "GroupWord", "Mat2", "RileyData",
    "NotHyperbolicError", "build_word", "bar_word", "free_reduce", "epsilons", "rho",
    "letter_matrix", "trace_bindings", "v_trace", "v_xyz", "to_uform", "word_matrix",
    "riley_from_matrices", "palindromic_defect", "palindromic_defect_word", "riley_closed_form", "canonical_poly",
    "noncanonical_v_roots", "same_up_to_unit", "riley_agrees", "rho_numeric",
    "w11_on_canonical", "w11_bar_on_canonical",
]
