"""Command-line front end.

    twhitehead riley --k 3
    twhitehead apoly --k 1 --json
    twhitehead volume --k 3 --alpha 0.7 --csv
    twhitehead verify --k 3 --trials 20

Exit status: 0 on success, 1 when a computation fails or a check does not
hold, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings

import numpy as np

from . import apoly, newton, riley, volume
from .polyring import PolyError


def num(x: float) -> str:
    return f"{x:.12g}"


def _round(x: float):
    """JSON-safe float with 12 significant digits."""
    if isinstance(x, np.generic):
        x = x.item()
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(num(x))
    return x


def _round_tree(obj):
    if isinstance(obj, dict):
        return {k: _round_tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v) for v in obj]
    return _round(obj)


def _emit_json(obj, out) -> None:
    json.dump(_round_tree(obj), out, indent=2, sort_keys=False)
    out.write("\n")


def _two_bridge(text: str) -> riley.TwoBridge:
    try:
        two_p, q = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 2p,q, got {text!r}") from None
    try:
        return riley.TwoBridge(two_p, q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ----------------------------------------------------------------------
# subcommands


def cmd_riley(args, out, err) -> int:
    if args.two_bridge is not None:
        spec = args.two_bridge
        up = riley.riley_from_matrices(spec)
        if args.json:
            _emit_json({"two_bridge": [spec.two_p, spec.q], "riley_uform": up.to_json()}, out)
        else:
            print(f"two-bridge b({spec.two_p},{spec.q})", file=out)
            print(f"riley (u, s1, s2): {up}", file=out)
        return 0
    k = _need_k(args)
    if k == 0:
        print("warning: W_0 is the (2,4) torus link and is not hyperbolic", file=err)
    data = riley.riley_closed_form(k)
    if args.json:
        obj = data.to_json()
        obj["riley_uform"] = data.riley_uform.to_json()
        obj["v_roots"] = data.v_roots
        _emit_json(obj, out)
        return 0
    print(f"k = {k}", file=out)
    print(f"riley (x, y, z): {data.riley_xyz}", file=out)
    for i, f in enumerate(data.factors):
        print(f"factor {i}: {f}", file=out)
    if data.v_roots:
        print("non-canonical v roots: " + ", ".join(num(v) for v in data.v_roots), file=out)
    print(f"riley (u, s1, s2): {data.riley_uform}", file=out)
    return 0


def cmd_apoly(args, out, err) -> int:
    tup = apoly.apoly_closed_form(_need_k(args))
    if args.json:
        _emit_json(tup.to_json(), out)
        return 0
    poly = tup.newton_polygon()
    print(f"k = {tup.k}", file=out)
    print(f"A1 = A2 = {tup.a1}", file=out)
    print(f"non-hyperbolic factor: {tup.nonhyp_factor}", file=out)
    print(f"canonical factor: {tup.canonical_factor}", file=out)
    print(f"Newton polygon vertices: {list(poly.vertices)}", file=out)
    print("slopes: " + ", ".join(newton.slope_str(s) for s in poly.slopes), file=out)
    return 0


def cmd_canonical(args, out, err) -> int:
    k = _need_k(args)
    cp = riley.canonical_poly(k)
    cf = apoly.canonical_factor(k)
    ok = apoly.canonical_check(k)
    if args.json:
        _emit_json({"k": k, "canonical_poly": cp.to_json(),
                    "canonical_factor": cf.to_json(), "check": ok}, out)
    else:
        print(f"canonical component (x, y, z): {cp}", file=out)
        print(f"A-polynomial factor: {cf}", file=out)
        print(f">= 3 monomials and >= 2 slopes: {ok}", file=out)
    return 0 if ok else 1


def cmd_newton(args, out, err) -> int:
    k = _need_k(args)
    poly = newton.newton_polygon(apoly.canonical_factor(k))
    if args.json:
        obj = {"k": k}
        obj.update(poly.to_json())
        _emit_json(obj, out)
    else:
        print(f"vertices: {list(poly.vertices)}", file=out)
        print("slopes: " + ", ".join(newton.slope_str(s) for s in poly.slopes), file=out)
    return 0


def cmd_volume(args, out, err) -> int:
    if args.alpha is None:
        raise _Usage("volume needs --alpha")
    k = _need_k(args)
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        curve = volume.volume(k, args.alpha, epsabs=args.tolerance or 1e-9)
    for msg in curve.warnings:
        print(f"warning: {msg}", file=err)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["omega", "re_z", "im_z", "integrand"])
        for om, z, f in curve.samples:
            w.writerow([num(om), num(z.real), num(z.imag), num(f)])
    elif args.json:
        _emit_json(curve.to_json(), out)
    else:
        print(f"Vol E(W_{k}, alpha={num(args.alpha)}) = {num(curve.volume)}", file=out)
        print(f"quadrature error estimate: {num(curve.quadrature_error_estimate)}", file=out)
        print(f"samples: {len(curve.samples)}", file=out)
    return 0


def cmd_cover(args, out, err) -> int:
    if args.r is None:
        raise _Usage("cover needs --r")
    k = _need_k(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        val = volume.cyclic_cover_volume(k, args.r, epsabs=args.tolerance or 1e-9)
    if args.json:
        _emit_json({"k": k, "r": args.r, "volume": val}, out)
    else:
        print(f"Vol M_{args.r}(W_{k}) = {num(val)}", file=out)
    return 0


def cmd_alpha_bound(args, out, err) -> int:
    k = _need_k(args)
    a = volume.estimate_alpha_bound(k)
    if args.json:
        _emit_json({"k": k, "alpha_bound": a}, out)
    else:
        print(f"alpha_W{k} = {num(a)}", file=out)
    return 0


def verify(k: int, trials: int = 20, seed: int = 0, tol: float = 1e-8,
           framing: str = "preferred") -> list[tuple[str, bool, str]]:
    """Cross-validation checks for W_k as (name, passed, detail) rows."""
    rows = [("riley matrices == closed form", riley.riley_agrees(k), "")]
    for comp in "ab":
        for sign in (1, -1):
            ok = apoly.oracle_agrees(k, comp, sign, framing)
            rows.append((f"elimination oracle, component {comp}, s2={sign:+d}", ok, ""))
    rows.append(("canonical factor: >= 3 monomials, >= 2 slopes", apoly.canonical_check(k), ""))
    rows.append(("reciprocity", apoly.is_reciprocal(apoly.canonical_factor(k)), ""))
    rep = apoly.numeric_witness(k, trials, seed, framing)
    rows.append(("numeric witness, canonical", not rep.failures and rep.max_canonical < tol,
                 num(rep.max_canonical)))
    rows.append(("numeric witness, non-canonical", rep.max_noncanonical < tol,
                 num(rep.max_noncanonical)))
    return rows


def cmd_verify(args, out, err) -> int:
    k = _need_k(args)
    rows = verify(k, args.trials, args.seed, args.tolerance or 1e-8, args.framing)
    ok = all(r[1] for r in rows)
    if args.json:
        _emit_json({"k": k, "framing": args.framing, "ok": ok,
                    "checks": [{"name": n, "pass": p, "detail": d} for n, p, d in rows]}, out)
    else:
        for name, passed, detail in rows:
            line = f"{'PASS' if passed else 'FAIL'}  {name}"
            print(line + (f"  ({detail})" if detail else ""), file=out)
    return 0 if ok else 1


COMMANDS = {
    "riley": cmd_riley,
    "apoly": cmd_apoly,
    "canonical": cmd_canonical,
    "newton": cmd_newton,
    "volume": cmd_volume,
    "cover": cmd_cover,
    "alpha-bound": cmd_alpha_bound,
    "verify": cmd_verify,
}


class _Usage(Exception):
    pass


def _need_k(args) -> int:
    if args.k is None:
        raise _Usage(f"{args.command} needs --k")
    return args.k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--two-bridge", type=_two_bridge, metavar="2p,q")
    common.add_argument("--alpha", type=float)
    common.add_argument("--r", type=int)
    common.add_argument("--trials", type=int, default=20)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tolerance", type=float)
    common.add_argument("--framing", choices=("preferred", "total"), default="preferred",
                        help="longitude w a^-1 (preferred) or w a^-1 a^-lk (total)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    p = argparse.ArgumentParser(prog="twhitehead",
                                description="A-polynomials and volumes of twisted Whitehead links")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.k is not None and args.k < 0:
            raise _Usage("--k must be >= 0")
        if args.k == 0 and args.command != "riley":
            raise riley.NotHyperbolicError("W_0 is not hyperbolic; only `riley` accepts --k 0")
        return COMMANDS[args.command](args, out, err)
    except _Usage as exc:
        parser.print_usage(err)
        print(f"error: {exc}", file=err)
        return 2
    except (ArithmeticError, ValueError, PolyError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
