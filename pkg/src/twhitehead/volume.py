"""Volumes of the hyperbolic cone-manifolds E_{W_k}(alpha) and of their
cyclic branched covers.

With s = exp(i w / 2) both meridians get the same eigenvalue, so the
canonical component restricts to a curve R_k(s, z) = 0 with
x = s + 1/s = 2 cos(w/2) real on the unit circle.  The volume is the
integral over [alpha, pi] of 2 log|(z - (s^-2 + 1)) / (z - (s^2 + 1))|
evaluated at a root z with Im z >= 0.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .chebyshev import cheb
from .polyring import LaurentPoly, var
from .riley import (NotHyperbolicError, TwistedWhitehead, build_word, rho_numeric,
                    w11_on_canonical)
from .roots import RootFindingError, polish_roots

IMAG_TOL = 1e-10  # |Im z| below this counts as real
COEFF_IMAG_TOL = 1e-12
JUMP_TOL = 0.5


class VolumeError(ArithmeticError):
    pass


# ----------------------------------------------------------------------
# the curve R_k(s, z)


def r_exact(k: int) -> LaurentPoly:
    """R_{W_k} as a polynomial in x and z."""
    spec = TwistedWhitehead(k)
    if k == 0:
        raise NotHyperbolicError("W_0 is not hyperbolic")
    x, z = var("x"), var("z")
    v = 2 * x ** 2 + z ** 2 - x ** 2 * z - 2
    n = spec.n
    if spec.odd:
        return x ** 2 * cheb(n - 1, v) - z * cheb(n, v) - (x ** 2 - z) * cheb(n - 2, v)
    return z * cheb(n, v) - (x ** 2 - z) * cheb(n - 1, v)


@lru_cache(maxsize=None)
def _r_table(k: int) -> tuple[np.ndarray, ...]:
    """Coefficient polynomials in x (numpy order, highest first) for each
    power of z, highest power of z first."""
    p = r_exact(k)
    parts = p.coefficients_in("z")
    out = []
    for e in range(max(parts), -1, -1):
        cx = parts[e].coefficients_in("x") if e in parts else {}
        top = max(cx, default=0)
        out.append(np.array([float(cx[j].constant_value()) if j in cx else 0.0
                             for j in range(top, -1, -1)]))
    return tuple(out)


def _check_omega(omega: float) -> None:
    if not 0 < omega <= math.pi:
        raise ValueError(f"omega must lie in (0, pi], got {omega}")


def r_poly(k: int, omega: float) -> np.ndarray:
    """Real coefficients (highest degree first) of R_k(e^{i omega/2}, z) in z."""
    _check_omega(omega)
    s = cmath.exp(0.5j * omega)
    x = s + 1 / s
    coeffs = np.array([np.polyval(c, x) for c in _r_table(k)], dtype=complex)
    if np.max(np.abs(coeffs.imag)) >= COEFF_IMAG_TOL * max(1.0, np.max(np.abs(coeffs))):
        raise VolumeError(f"R_{k} has non-real coefficients at omega={omega}: {coeffs}")
    return coeffs.real


# ----------------------------------------------------------------------
# root choice and integrand


def _log_ratio(z: complex, s: complex) -> float:
    den = z - (s ** 2 + 1)
    if den == 0:
        raise VolumeError("chosen root hits the pole z = s^2 + 1")
    return 2 * math.log(abs((z - (s ** -2 + 1)) / den))


@dataclass(frozen=True)
class RootChoice:
    z: complex
    value: float
    real_regime: bool
    tie: bool = False


def choose_root(k: int, omega: float) -> RootChoice:
    """Root of R_k with Im z >= 0 giving the largest integrand.

    All roots real (within IMAG_TOL) puts us in the non-hyperbolic regime,
    where the integrand is 0.  Equal maxima are broken by larger Im z.
    """
    coeffs = r_poly(k, omega)
    try:
        roots = polish_roots(coeffs)
    except RootFindingError as exc:
        raise RootFindingError(f"{exc}; R_{k} at omega={omega}: {list(coeffs)}") from exc
    s = cmath.exp(0.5j * omega)
    upper = [z for z in roots if z.imag >= -IMAG_TOL and abs(z.imag) >= IMAG_TOL]
    if not upper:
        z = min(roots, key=lambda r: (abs(r.imag), r.real)) if len(roots) else 0j
        return RootChoice(complex(z.real, 0.0), 0.0, True)
    scored = sorted(((_log_ratio(z, s), z.imag, z) for z in upper),
                    key=lambda t: (t[0], t[1]), reverse=True)
    best = scored[0]
    tie = len(scored) > 1 and abs(scored[1][0] - best[0]) <= 1e-12 * max(1.0, abs(best[0]))
    return RootChoice(best[2], best[0], False, tie)


def integrand(k: int, omega: float) -> float:
    return choose_root(k, omega).value


def integrand_via_w11(k: int, omega: float) -> float:
    """2 log|w11| with s1 = s2 = e^{i omega/2}, from the closed form of w11
    on the canonical component."""
    c = choose_root(k, omega)
    if c.real_regime:
        return 0.0
    s = cmath.exp(0.5j * omega)
    return 2 * math.log(abs(w11_on_canonical(c.z, s, s)))


def integrand_via_rho(k: int, omega: float) -> float:
    """2 log|w11| with w11 read off the numerical matrix product rho(w)."""
    c = choose_root(k, omega)
    if c.real_regime:
        return 0.0
    s = cmath.exp(0.5j * omega)
    u = c.z - s ** 2 - s ** -2
    m = rho_numeric(build_word(TwistedWhitehead(k)), s, s, u)
    return 2 * math.log(abs(m[0, 0]))


# ----------------------------------------------------------------------
# hyperbolicity bound


def has_nonreal_root(k: int, omega: float) -> bool:
    return not choose_root(k, omega).real_regime


@lru_cache(maxsize=None)
def estimate_alpha_bound(k: int, grid: int = 400, tol: float = 1e-8) -> float:
    """Largest omega in (0, pi) below which R_k has a nonreal root.

    Scans down from pi for the first sample in the hyperbolic regime, then
    bisects the bracketing interval.
    """
    if k < 1:
        raise NotHyperbolicError("W_0 is not hyperbolic")
    ws = np.linspace(math.pi, 0.0, grid + 1)[:-1]
    hi = None
    for a, b in zip(ws, ws[1:]):
        if has_nonreal_root(k, b):
            lo, hi = b, a
            break
    if hi is None:
        raise VolumeError(f"no hyperbolic/non-hyperbolic transition found for k={k}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if has_nonreal_root(k, mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ----------------------------------------------------------------------
# branch switches
#
# The maximal-integrand rule can hop from one root to another.  The
# integrand stays continuous there but has a kink, which adaptive
# quadrature only resolves to 1e-9 if it is told where the kink is.

SWITCH_STEP = 0.1  # |dz| between grid neighbours that counts as a hop


def _is_hop(za: complex, zb: complex) -> bool:
    return abs(zb - za) > SWITCH_STEP and min(za.imag, zb.imag) > SWITCH_STEP / 2


@lru_cache(maxsize=None)
def branch_switches(k: int, grid: int = 800, tol: float = 1e-11) -> tuple[float, ...]:
    """Angles in (0, alpha bound) where the chosen root changes branch."""
    bound = estimate_alpha_bound(k)
    ws = np.linspace(bound, 0.0, grid + 1)[1:-1]
    zs = [choose_root(k, w).z for w in ws]
    out = []
    for a, b, za, zb in zip(ws, ws[1:], zs, zs[1:]):
        if not _is_hop(za, zb):
            continue
        # keep the bracket between a sample on the left branch and one on the right
        lo, hi = b, a
        zlo, zhi = zb, za
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            zm = choose_root(k, mid).z
            if abs(zm - zlo) < abs(zm - zhi):
                lo, zlo = mid, zm
            else:
                hi, zhi = mid, zm
        out.append(0.5 * (lo + hi))
    return tuple(sorted(out))


# ----------------------------------------------------------------------
# volume


@dataclass
class VolumeCurve:
    k: int
    alpha: float
    volume: float
    quadrature_error_estimate: float
    samples: list = field(default_factory=list)  # (omega, z, integrand)
    warnings: list = field(default_factory=list)
    ties: int = 0

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "alpha": self.alpha,
            "volume": self.volume,
            "quadrature_error_estimate": self.quadrature_error_estimate,
            "samples": [
                {"omega": w, "re_z": z.real, "im_z": z.imag, "integrand": f}
                for w, z, f in self.samples
            ],
            "warnings": list(self.warnings),
        }


def _continuity_warnings(samples) -> list[str]:
    """Flag consecutive samples whose chosen roots jump by more than
    JUMP_TOL away from a conjugate collision on the real axis."""
    out = []
    for (w0, z0, f0), (w1, z1, f1) in zip(samples, samples[1:]):
        if f0 == 0.0 or f1 == 0.0:
            continue
        if abs(z1 - z0) > JUMP_TOL and min(abs(z0.imag), abs(z1.imag)) > JUMP_TOL / 2:
            out.append(f"root jump {abs(z1 - z0):.3g} between omega={w0:.6g} and {w1:.6g}")
    return out


def volume(k: int, alpha: float, epsabs: float = 1e-9, limit: int = 500) -> VolumeCurve:
    """Vol E_{W_k}(alpha) by adaptive quadrature over [alpha, pi]."""
    if k < 1:
        raise NotHyperbolicError("W_0 is not hyperbolic")
    if not 0 < alpha <= math.pi:
        raise ValueError(f"alpha must lie in (0, pi), got {alpha}")
    if alpha == math.pi:
        return VolumeCurve(k, alpha, 0.0, 0.0)
    samples = []

    def f(w):
        c = choose_root(k, w)
        samples.append((w, c.z, c.value, c.tie))
        return c.value

    bound = estimate_alpha_bound(k)
    points = [w for w in (*branch_switches(k), bound) if alpha < w < math.pi] or None
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            val, err = quad(f, alpha, math.pi, epsabs=epsabs, epsrel=0.0,
                            limit=limit, points=points)
        except IntegrationWarning as exc:
            raise VolumeError(f"quadrature did not converge for k={k}, alpha={alpha}: {exc}") from exc
    samples.sort(key=lambda t: t[0])
    curve = VolumeCurve(k, alpha, val, err,
                        [(w, z, v) for w, z, v, _ in samples],
                        ties=sum(t for *_, t in samples))
    curve.warnings = _continuity_warnings(curve.samples)
    for msg in curve.warnings:
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
    return curve


def cyclic_cover_volume(k: int, r: int, epsabs: float = 1e-9) -> float:
    """Volume of the r-fold cyclic cover branched over W_k: r Vol E(2 pi / r)."""
    if r < 3:
        raise ValueError("cyclic covers need r >= 3")
    return r * volume(k, 2 * math.pi / r, epsabs=epsabs).volume
