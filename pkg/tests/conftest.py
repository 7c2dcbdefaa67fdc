import sympy as sp
from hypothesis import settings

from twhitehead.polyring import NVARS, VAR_INDEX, VARS, LaurentPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SYMS = {name: sp.Symbol(name) for name in VARS}


def to_sympy(p: LaurentPoly):
    """Independent reading of a LaurentPoly as a sympy expression."""
    out = sp.Integer(0)
    for exps, c in p.items():
        term = sp.Integer(c)
        for name, e in zip(VARS, exps):
            if e:
                term *= SYMS[name] ** e
        out += term
    return sp.expand(out)


def from_sympy(expr) -> LaurentPoly:
    terms = {}
    for term in sp.Add.make_args(sp.expand(expr)):
        if term == 0:
            continue
        c, rest = term.as_coeff_Mul()
        full = [0] * NVARS
        for b, e in rest.as_powers_dict().items():
            if b != 1:
                full[VAR_INDEX[str(b)]] = int(e)
        key = tuple(full)
        terms[key] = terms.get(key, 0) + int(c)
    return LaurentPoly.from_dict(terms)
