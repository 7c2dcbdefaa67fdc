"""2x2 matrices over the Laurent polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .polyring import ONE, ZERO, LaurentPoly, eval_complex


@dataclass(frozen=True)
class Mat2:
    m11: LaurentPoly
    m12: LaurentPoly
    m21: LaurentPoly
    m22: LaurentPoly

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(ONE, ZERO, ZERO, ONE)

    def entries(self) -> tuple[LaurentPoly, ...]:
        return (self.m11, self.m12, self.m21, self.m22)

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(*(a - b for a, b in zip(self.entries(), o.entries())))

    def trace(self) -> LaurentPoly:
        return self.m11 + self.m22

    def det(self) -> LaurentPoly:
        return self.m11 * self.m22 - self.m12 * self.m21

    def inverse(self) -> "Mat2":
        """Adjugate; the true inverse for det = 1."""
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def evaluate(self, point: Mapping[str, complex]) -> np.ndarray:
        return np.array(
            [[eval_complex(self.m11, point), eval_complex(self.m12, point)],
             [eval_complex(self.m21, point), eval_complex(self.m22, point)]],
            dtype=complex,
        )

    def __str__(self):
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"
