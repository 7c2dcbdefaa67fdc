"""Chebyshev polynomials of the second kind, S_k(v), for every integer k."""

from __future__ import annotations

import threading

from .matrix import Mat2
from .polyring import ONE, ZERO, LaurentPoly, PolyError, binomial, var

_memo: dict[int, LaurentPoly] = {0: ONE, -1: ZERO}
_lock = threading.Lock()


def cheb(k: int, v: LaurentPoly | None = None) -> LaurentPoly:
    """S_k(v) from S_0 = 1, S_1 = v, S_k = v S_{k-1} - S_{k-2}.

    With ``v`` omitted the result is a polynomial in the variable ``v``;
    otherwise ``v`` is substituted (the recurrence is run directly in the
    given polynomial, which is cheaper than substituting afterwards).
    """
    if v is not None:
        return _cheb_at(k, v)
    if k < -1:
        return -cheb(-k - 2)
    with _lock:
        if k in _memo:
            return _memo[k]
        top = max(_memo)
        vv = var("v")
        for j in range(top + 1, k + 1):
            _memo[j] = vv * _memo[j - 1] - _memo[j - 2]
        return _memo[k]


def _cheb_at(k: int, v: LaurentPoly) -> LaurentPoly:
    if k < -1:
        return -_cheb_at(-k - 2, v)
    if k == -1:
        return ZERO
    prev, cur = ZERO, ONE
    for _ in range(k):
        prev, cur = cur, v * cur - prev
    return cur


def cheb_pair(n: int, v: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """(S_n, S_{n-1}, S_{n-2}) evaluated at ``v``."""
    return _cheb_at(n, v), _cheb_at(n - 1, v), _cheb_at(n - 2, v)


def cheb_closed_form(k: int) -> LaurentPoly:
    """sum_{0 <= i <= k/2} (-1)^i C(k-i, k-2i) v^(k-2i)."""
    if k < 0:
        raise ValueError("closed form is stated for k >= 0 only")
    return sum(
        (LaurentPoly.monomial((-1) ** i * binomial(k - i, k - 2 * i), v=k - 2 * i)
         for i in range(k // 2 + 1)),
        ZERO,
    )


def cheb_shifted(k: int) -> LaurentPoly:
    """S_k(2 + q) = sum_{i=0}^k C(k+1+i, 2i+1) q^i."""
    if k < 0:
        raise ValueError("shifted expansion is stated for k >= 0 only")
    return sum(
        (LaurentPoly.monomial(binomial(k + 1 + i, 2 * i + 1), q=i) for i in range(k + 1)),
        ZERO,
    )


def mat_power(V: Mat2, k: int, v: LaurentPoly | None = None) -> Mat2:
    """V**k as S_{k-1}(v) V - S_{k-2}(v) I, valid when det V = 1.

    ``v`` defaults to trace(V).  Works for negative k as well.
    """
    if v is None:
        v = V.trace()
    if all(e.is_constant() for e in V.entries()):
        if V.det() != ONE:
            raise PolyError("mat_power needs det(V) = 1")
    a = _cheb_at(k - 1, v)
    b = _cheb_at(k - 2, v)
    return Mat2(a * V.m11 - b, a * V.m12, a * V.m21, a * V.m22 - b)


def cheb_value(k: int, v):
    """Numerical S_k(v) for a float or complex v."""
    if k < -1:
        return -cheb_value(-k - 2, v)
    if k == -1:
        return 0 * v
    prev, cur = 0 * v, 1 + 0 * v
    for _ in range(k):
        prev, cur = cur, v * cur - prev
    return cur

