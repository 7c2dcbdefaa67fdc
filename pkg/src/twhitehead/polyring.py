"""
Sparse multivariate Laurent polynomials over the integers.

Every polynomial lives in one fixed ring whose variables are drawn from
the alphabet ``VARS``.  Monomials are stored as packed Python ints: each
exponent occupies a biased 16-bit field, the most significant field holds
the (biased) total degree, and the variable fields follow in alphabet
order.  With this layout integer comparison of keys *is* the
graded-lexicographic order, and multiplying monomials is a single integer
addition.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping, Union

VARS = ("x", "y", "z", "v", "u", "s1", "s2", "M", "L", "t", "q")
NVARS = len(VARS)
VAR_INDEX = {name: i for i, name in enumerate(VARS)}

_BITS = 16
_MASK = (1 << _BITS) - 1
_BIAS = 1 << (_BITS - 1)
_MAX_EXP = _BIAS - 1
_DEG_SHIFT = _BITS * NVARS
_DEG_BIAS = 1 << 24
_SHIFTS = tuple(_BITS * (NVARS - 1 - i) for i in range(NVARS))
_ZERO_KEY = (_DEG_BIAS << _DEG_SHIFT) + sum(_BIAS << s for s in _SHIFTS)


class PolyError(ArithmeticError):
    pass


class PoleError(PolyError):
    """Evaluation hit a negative power of a variable bound to zero."""


def pack(exps: Iterable[int]) -> int:
    exps = tuple(exps)
    if len(exps) != NVARS:
        raise ValueError(f"expected {NVARS} exponents, got {len(exps)}")
    key = (sum(exps) + _DEG_BIAS) << _DEG_SHIFT
    for e, s in zip(exps, _SHIFTS):
        if abs(e) > _MAX_EXP:
            raise OverflowError(f"exponent {e} out of range")
        key += (e + _BIAS) << s
    return key


def unpack(key: int) -> tuple[int, ...]:
    return tuple(((key >> s) & _MASK) - _BIAS for s in _SHIFTS)


def _exp_of(key: int, i: int) -> int:
    return ((key >> _SHIFTS[i]) & _MASK) - _BIAS


def _shift_key(i: int, e: int) -> int:
    """Key offset that multiplies a monomial by VARS[i]**e."""
    return (e << _DEG_SHIFT) + (e << _SHIFTS[i])


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    Build values with :func:`var`, :func:`const` or :meth:`from_dict` and
    combine them with the usual operators.  ``p ** -1`` is allowed only
    when ``p`` is a unit monomial.
    """

    __slots__ = ("_t", "_maxabs", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, _trusted: bool = False):
        if terms is None:
            self._t = {}
        elif _trusted:
            self._t = terms
        else:
            self._t = {k: c for k, c in terms.items() if c}
        self._maxabs = None
        self._hash = None

    # construction ---------------------------------------------------
    @classmethod
    def from_dict(cls, d: Mapping) -> "LaurentPoly":
        """From ``{exps: coef}`` where exps is a full exponent tuple or a
        ``{varname: exp}`` mapping."""
        out: dict[int, int] = {}
        for exps, c in d.items():
            if isinstance(exps, Mapping):
                full = [0] * NVARS
                for name, e in exps.items():
                    full[VAR_INDEX[name]] = e
                exps = full
            k = pack(exps)
            out[k] = out.get(k, 0) + int(c)
        return cls(out)

    @classmethod
    def monomial(cls, coef: int = 1, **exps: int) -> "LaurentPoly":
        if not coef:
            return ZERO
        return cls.from_dict({tuple(exps.get(n, 0) for n in VARS): coef})

    # basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def items(self):
        """(exponent tuple, coefficient) pairs in descending grlex order."""
        for k in sorted(self._t, reverse=True):
            yield unpack(k), self._t[k]

    def coefficient(self, **exps: int) -> int:
        return self._t.get(pack(tuple(exps.get(n, 0) for n in VARS)), 0)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and _ZERO_KEY in self._t)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise PolyError(f"{self} is not constant")
        return self._t.get(_ZERO_KEY, 0)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_unit(self) -> bool:
        """True for ±(monomial), the units of the Laurent ring."""
        return len(self._t) == 1 and abs(next(iter(self._t.values()))) == 1

    def variables(self) -> tuple[str, ...]:
        used = [False] * NVARS
        for k in self._t:
            for i in range(NVARS):
                if not used[i] and _exp_of(k, i):
                    used[i] = True
        return tuple(n for n, f in zip(VARS, used) if f)

    def degree(self, name: str) -> int:
        i = VAR_INDEX[name]
        return max(_exp_of(k, i) for k in self._t) if self._t else 0

    def min_degree(self, name: str) -> int:
        i = VAR_INDEX[name]
        return min(_exp_of(k, i) for k in self._t) if self._t else 0

    def total_degree(self) -> int:
        return (max(self._t) >> _DEG_SHIFT) - _DEG_BIAS if self._t else 0

    def leading_key(self) -> int:
        return max(self._t)

    def leading_coefficient(self) -> int:
        return self._t[max(self._t)] if self._t else 0

    def leading_term(self) -> "LaurentPoly":
        k = max(self._t)
        return LaurentPoly({k: self._t[k]}, True)

    def content(self) -> int:
        g = 0
        for c in self._t.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def _max_abs_exp(self) -> int:
        if self._maxabs is None:
            m = 0
            for k in self._t:
                for s in _SHIFTS:
                    e = abs(((k >> s) & _MASK) - _BIAS)
                    if e > m:
                        m = e
            self._maxabs = m
        return self._maxabs

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(out, True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._t.items()}, True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly(out, True)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly({k: c * other for k, c in self._t.items()}, True)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._t or not other._t:
            return ZERO
        if self._max_abs_exp() + other._max_abs_exp() > _MAX_EXP:
            raise OverflowError("exponent overflow in product")
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        z = _ZERO_KEY
        for kb, cb in b.items():
            off = kb - z
            for ka, ca in a.items():
                k = ka + off
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly({k: c for k, c in out.items() if c}, True)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.is_unit():
                raise PolyError(f"cannot invert non-unit {self}")
            (k, c), = self._t.items()
            return LaurentPoly({2 * _ZERO_KEY - k: c}, True) ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def shift(self, **exps: int) -> "LaurentPoly":
        """Multiply by the monomial prod(var**e)."""
        off = sum(_shift_key(VAR_INDEX[n], e) for n, e in exps.items())
        if not off:
            return self
        return LaurentPoly({k + off: c for k, c in self._t.items()}, True)

    def scale_down(self, d: int) -> "LaurentPoly":
        """Exact division of every coefficient by the integer ``d``."""
        out = {}
        for k, c in self._t.items():
            q, r = divmod(c, d)
            if r:
                raise PolyError(f"coefficient {c} not divisible by {d}")
            out[k] = q
        return LaurentPoly(out, True)

    def coefficients_in(self, name: str) -> dict[int, "LaurentPoly"]:
        """Split as ``sum(name**e * c_e)``; returns ``{e: c_e}``."""
        i = VAR_INDEX[name]
        parts: dict[int, dict[int, int]] = {}
        for k, c in self._t.items():
            e = _exp_of(k, i)
            parts.setdefault(e, {})[k - _shift_key(i, e)] = c
        return {e: LaurentPoly(d, True) for e, d in parts.items()}

    def diff(self, name: str) -> "LaurentPoly":
        i = VAR_INDEX[name]
        sh = _shift_key(i, -1)
        out = {}
        for k, c in self._t.items():
            e = _exp_of(k, i)
            if e:
                out[k + sh] = c * e
        return LaurentPoly(out, True)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises PolyError unless it is exact."""
        if not other._t:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._t:
            return ZERO
        if len(other._t) == 1:
            (kb, cb), = other._t.items()
            out = {}
            for k, c in self._t.items():
                q, r = divmod(c, cb)
                if r:
                    raise PolyError("inexact division")
                out[k - kb + _ZERO_KEY] = q
            return LaurentPoly(out, True)
        # work in the polynomial ring, where grlex is a well-order
        sa, sb = monomial_part(self), monomial_part(other)
        a = self.shift(**{n: -e for n, e in sa.items()})
        b = other.shift(**{n: -e for n, e in sb.items()})
        lb = max(b._t)
        clb = b._t[lb]
        r = dict(a._t)
        q = {}
        btems = list(b._t.items())
        while r:
            lr = max(r)
            m = lr - lb + _ZERO_KEY
            if min(unpack(m)) < 0:
                raise PolyError("inexact division")
            c, rem = divmod(r[lr], clb)
            if rem:
                raise PolyError("inexact division")
            q[m] = c
            off = m - _ZERO_KEY
            for kb, cb in btems:
                k = kb + off
                s = r.get(k, 0) - c * cb
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        shift = {n: sa.get(n, 0) - sb.get(n, 0) for n in set(sa) | set(sb)}
        return LaurentPoly(q, True).shift(**shift)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
        except PolyError:
            return False
        return True

    # printing ---------------------------------------------------------
    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.items():
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(VARS, exps) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> dict:
        used = self.variables()
        idx = [VAR_INDEX[n] for n in used]
        terms = [
            {"coef": str(c), "exps": [exps[i] for i in idx]}
            for exps, c in self.items()
        ]
        return {"vars": list(used), "terms": terms}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        names = obj["vars"]
        d = {}
        for term in obj["terms"]:
            d[tuple(dict(zip(names, term["exps"])).get(n, 0) for n in VARS)] = int(term["coef"])
        return cls.from_dict(d)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return const(x)
    return NotImplemented


def const(c: int) -> LaurentPoly:
    return LaurentPoly({_ZERO_KEY: int(c)}) if c else ZERO


def var(name: str) -> LaurentPoly:
    return LaurentPoly({_ZERO_KEY + _shift_key(VAR_INDEX[name], 1): 1}, True)


def variables(names: str) -> tuple[LaurentPoly, ...]:
    """``x, y, z = variables("x y z")``"""
    return tuple(var(n) for n in names.split())


ZERO = LaurentPoly()
ONE = LaurentPoly({_ZERO_KEY: 1}, True)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# ----------------------------------------------------------------------
# normalization, gcd


def monomial_part(p: LaurentPoly) -> dict[str, int]:
    """Exponents of the largest monomial dividing ``p`` (the per-variable
    minimum exponents)."""
    return {n: p.min_degree(n) for n in p.variables() if p.min_degree(n)}


def to_polynomial(p: LaurentPoly) -> LaurentPoly:
    """Divide out the monomial factor so every variable's minimum exponent is 0."""
    m = monomial_part(p)
    return p.shift(**{n: -e for n, e in m.items()}) if m else p


def primitive_part(p: LaurentPoly) -> LaurentPoly:
    """Remove integer content and monomial factor; make the leading
    (graded-lex) coefficient positive."""
    if p.is_zero():
        raise PolyError("primitive part of the zero polynomial")
    p = to_polynomial(p)
    c = p.content()
    if p.leading_coefficient() < 0:
        c = -c
    return p if c == 1 else p.scale_down(c)


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """a == ±monomial * b."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if len(a) != len(b):
        return False
    ka, kb = a.leading_key(), b.leading_key()
    ca, cb = a._t[ka], b._t[kb]
    if abs(ca) != abs(cb):
        return False
    unit = LaurentPoly({ka - kb + _ZERO_KEY: ca // cb}, True)
    return unit * b == a


def _main_var(*polys: LaurentPoly) -> str | None:
    for n in VARS:
        for p in polys:
            if any(_exp_of(k, VAR_INDEX[n]) for k in p._t):
                return n
    return None


def _leading_in(p: LaurentPoly, name: str) -> tuple[int, LaurentPoly]:
    parts = p.coefficients_in(name)
    d = max(parts)
    return d, parts[d]


def content_in(p: LaurentPoly, name: str) -> LaurentPoly:
    """gcd of the coefficients of ``p`` viewed as a polynomial in ``name``."""
    g = ZERO
    for c in p.coefficients_in(name).values():
        g = gcd(g, c)
        if g == ONE:
            break
    return g


def _prem(a: LaurentPoly, b: LaurentPoly, name: str) -> LaurentPoly:
    db, lb = _leading_in(b, name)
    r = a
    while not r.is_zero():
        dr = r.degree(name)
        if dr < db:
            break
        lr = r.coefficients_in(name)[dr]
        r = lb * r - (lr * b).shift(**{name: dr - db})
    return r


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in Z[vars], normalized by primitive_part
    conventions except that the integer content is kept."""
    if a.is_zero() and b.is_zero():
        return ZERO
    if a.is_zero():
        return _normalize_gcd(b)
    if b.is_zero():
        return _normalize_gcd(a)
    a, b = to_polynomial(a), to_polynomial(b)
    name = _main_var(a, b)
    if name is None:
        return const(math.gcd(a.constant_value(), b.constant_value()))
    if a.degree(name) == 0:
        return gcd(a, content_in(b, name))
    if b.degree(name) == 0:
        return gcd(content_in(a, name), b)
    ca, cb = content_in(a, name), content_in(b, name)
    g_c = gcd(ca, cb)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    if pa.degree(name) < pb.degree(name):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, name)
        if r.is_zero():
            break
        if r.degree(name) == 0:
            pb = ONE
            break
        pa, pb = pb, to_polynomial(r.exact_div(content_in(r, name)))
    return _normalize_gcd(g_c * pb.exact_div(content_in(pb, name)))


def _normalize_gcd(p: LaurentPoly) -> LaurentPoly:
    p = to_polynomial(p)
    return -p if p.leading_coefficient() < 0 else p


def squarefree_part(p: LaurentPoly) -> LaurentPoly:
    """Product of the distinct irreducible factors of ``p`` (primitive)."""
    p = primitive_part(p)
    g = p
    for n in p.variables():
        g = gcd(g, p.diff(n))
        if g.total_degree() == 0:
            return p
    return primitive_part(p.exact_div(g))


# ----------------------------------------------------------------------
# rational functions


class RatFunc:
    """numerator / denominator, both LaurentPoly.  Not reduced until
    :meth:`normalize` is called."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _coerce(num), _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        if den.is_monomial():
            (k, c), = den._t.items()
            if c in (1, -1) or all(x % c == 0 for x in num._t.values()):
                num = num.exact_div(den)
                den = ONE
        self.num = num
        self.den = den

    @classmethod
    def of(cls, x) -> "RatFunc":
        return x if isinstance(x, RatFunc) else cls(x)

    def __add__(self, other):
        other = RatFunc.of(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.of(other))

    def __rsub__(self, other):
        return RatFunc.of(other) - self

    def __mul__(self, other):
        other = RatFunc.of(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.of(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc(self.den, self.num) ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        other = RatFunc.of(other) if isinstance(other, (int, LaurentPoly)) else other
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        r = self.normalize()
        return hash((r.num, r.den))

    def is_polynomial(self) -> bool:
        return self.den.is_unit() or self.den.divides(self.num)

    def to_poly(self) -> LaurentPoly:
        """The numerator divided exactly by the denominator."""
        return self.num.exact_div(self.den)

    def normalize(self) -> "RatFunc":
        """Cancel the gcd of numerator and denominator; fix the sign so the
        denominator's leading coefficient is positive."""
        if self.num.is_zero():
            return RatFunc(ZERO)
        g = gcd(self.num, self.den)
        num, den = self.num.exact_div(g), self.den.exact_div(g)
        mono = monomial_part(den)
        if mono:
            num = num.shift(**{n: -e for n, e in mono.items()})
            den = den.shift(**{n: -e for n, e in mono.items()})
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RatFunc(num, den)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


# ----------------------------------------------------------------------
# substitution, evaluation


Binding = Union[RatFunc, LaurentPoly, int]


def substitute(p: LaurentPoly, bindings: Mapping[str, Binding]) -> RatFunc:
    """Simultaneously replace variables by rational functions.

    Variables are processed one at a time with a homogenized Horner scheme,
    which keeps intermediate sizes close to the size of the result.  When a
    binding mentions another bound variable the substitution is done
    term-by-term instead so that it stays simultaneous.
    """
    bs = {}
    for name, b in bindings.items():
        if name not in VAR_INDEX:
            raise KeyError(f"unknown variable {name!r}")
        b = RatFunc.of(b)
        if b.den.is_zero():
            raise ZeroDivisionError(f"binding for {name} has zero denominator")
        bs[name] = b
    if not bs or p.is_zero():
        return RatFunc(p)
    bound = set(bs)
    if any((set(b.num.variables()) | set(b.den.variables())) & (bound - {n})
           for n, b in bs.items()):
        return _substitute_termwise(p, bs)
    num, den = p, ONE
    for name in VARS:
        if name in bs:
            num, d = _subst_one(num, name, bs[name])
            den = den * d
    return RatFunc(num, den)


def _subst_one(p: LaurentPoly, name: str, b: RatFunc) -> tuple[LaurentPoly, LaurentPoly]:
    parts = p.coefficients_in(name)
    lo, hi = min(min(parts), 0), max(max(parts), 0)
    N, D = b.num, b.den
    if N.is_unit() and D == ONE:
        # monomial image: shift exponents directly
        out = ZERO
        for e, c in parts.items():
            out = out + c * N ** e
        return out, ONE
    dpow = [ONE]
    if D != ONE:
        for _ in range(hi - lo):
            dpow.append(dpow[-1] * D)
    acc = ZERO
    for e in range(hi, lo - 1, -1):
        acc = acc * N
        c = parts.get(e)
        if c is not None:
            acc = acc + (c * dpow[hi - e] if D != ONE else c)
    den = N ** (-lo) if lo else ONE
    if hi and D != ONE:
        den = den * dpow[hi]
    return acc, den


def _substitute_termwise(p: LaurentPoly, bs: Mapping[str, RatFunc]) -> RatFunc:
    total = RatFunc(ZERO)
    for exps, c in p.items():
        term = RatFunc(const(c))
        rest = {}
        for n, e in zip(VARS, exps):
            if not e:
                continue
            if n in bs:
                term = term * bs[n] ** e
            else:
                rest[n] = e
        total = total + term * LaurentPoly.monomial(1, **rest)
    return total


def eval_complex(p: LaurentPoly, point: Mapping[str, complex]) -> complex:
    """Evaluate with complex arithmetic, nested Horner in each variable."""
    names = p.variables()
    missing = [n for n in names if n not in point]
    if missing:
        raise KeyError(f"unbound variables: {missing}")
    idx = [VAR_INDEX[n] for n in names]
    rows = [([_exp_of(k, i) for i in idx], c) for k, c in p._t.items()]
    vals = [complex(point[n]) for n in names]
    return _horner(rows, 0, vals) if rows else 0j


def _horner(rows, level, vals) -> complex:
    if level == len(vals):
        return complex(sum(c for _, c in rows))
    groups: dict[int, list] = {}
    for exps, c in rows:
        groups.setdefault(exps[level], []).append((exps, c))
    x = vals[level]
    lo, hi = min(groups), max(groups)
    if lo < 0 and x == 0:
        raise PoleError(f"negative power of {level}-th variable at zero")
    acc = 0j
    for e in range(hi, lo - 1, -1):
        acc *= x
        g = groups.get(e)
        if g is not None:
            acc += _horner(g, level + 1, vals)
    return acc * x ** lo if lo else acc


def numeric_coefficients(p: LaurentPoly, name: str, point: Mapping[str, complex]) -> list[complex]:
    """Coefficients (highest degree first) of ``p`` as a polynomial in
    ``name`` after evaluating every other variable at ``point``.  Negative
    powers of ``name`` are shifted away."""
    parts = p.coefficients_in(name)
    lo, hi = min(parts), max(parts)
    return [eval_complex(parts[e], point) if e in parts else 0j for e in range(hi, lo - 1, -1)]


# ----------------------------------------------------------------------
# resultants


def sylvester_matrix(p: LaurentPoly, r: LaurentPoly, elim: str) -> list[list[LaurentPoly]]:
    """Rows of p's coefficients first, then r's; highest power leftmost."""
    cp = _dense_coeffs(p, elim)
    cr = _dense_coeffs(r, elim)
    m, n = len(cp) - 1, len(cr) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([ZERO] * i + cp + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + cr + [ZERO] * (size - n - 1 - i))
    return rows


def _dense_coeffs(p: LaurentPoly, elim: str) -> list[LaurentPoly]:
    parts = p.coefficients_in(elim)
    lo, hi = min(parts), max(parts)
    return [parts.get(e, ZERO) for e in range(hi, lo - 1, -1)]


def determinant(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free Bareiss elimination; exact over Z[vars^±]."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                val = a[i][j] * pivot - aik * a[k][j]
                a[i][j] = val.exact_div(prev) if prev != ONE else val
            a[i][k] = ZERO
        prev = pivot
    return a[n - 1][n - 1] * sign


def resultant(p: LaurentPoly, r: LaurentPoly, elim: str) -> LaurentPoly:
    """Sylvester resultant with respect to ``elim``.

    Any monomial factor in ``elim`` is removed first so both inputs are
    genuine polynomials in ``elim``.  Sign convention: p's coefficient rows
    come first in the Sylvester matrix.
    """
    if p.is_zero() or r.is_zero():
        return ZERO
    p = p.shift(**{elim: -p.min_degree(elim)})
    r = r.shift(**{elim: -r.min_degree(elim)})
    if p.degree(elim) == 0 and r.degree(elim) == 0:
        raise PolyError(f"neither polynomial involves {elim}")
    return determinant(sylvester_matrix(p, r, elim))


def binomial(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)

