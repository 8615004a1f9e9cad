"""Limiting covariance structure of the regularized counting field.

The stationary log-correlated kernel is

    Q(x)    = -log|x| + (1/2) log|ell^2 - x^2|,
    Qhat(k) = sin^2(pi ell k) / |k|,

and the mollified two-scale covariance

    T_{eps,delta}(u, v) = int e^{-2 pi i (u-v) k} phihat(eps k)
                          psihat(delta k) Qhat(k) dk

is evaluated in closed form up to two 1-d quadratures by splitting off the
log-singular part with the cosine-integral identity

    int_0^inf (1 - cos(w k)) Phi(k) / k dk = Cin(w) + E_Phi(w),

applied to the three frequencies produced by the product-to-sum identity
-2 cos(a) sin^2(b/2) = (1 - cos a) - (1 - cos(b+a))/2 - (1 - cos(b-a))/2.
A brute-force oscillatory quadrature of the same integral is kept as the
cross-check oracle (``t_quadrature``).

Only even mollifiers are shipped (gaussian, smooth bump, cauchy-like), so
every Fourier factor here is real and even.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import integrate
from scipy.interpolate import CubicSpline
from scipy.special import erf

from .specfun import cin

__all__ = [
    "Mollifier",
    "gaussian_mollifier",
    "bump_mollifier",
    "cauchy_mollifier",
    "q_kernel",
    "q_eps",
    "q_hat",
    "cin_error_term",
    "t_exact",
    "t_quadrature",
    "CovarianceTable",
]

_QUAD_TOL = 1e-11


@dataclass
class Mollifier:
    """Even probability density with evaluable Fourier transform and CDF.

    ``alpha`` is the declared finite moment order (membership in the
    admissible class D_alpha); ``strip`` the half-width of the strip of
    analyticity (None for non-analytic kinds, inf for entire ones).
    """

    kind: str
    alpha: float
    strip: Optional[float]
    pdf: Callable[[np.ndarray], np.ndarray]
    fourier: Callable[[np.ndarray], np.ndarray]
    cdf: Callable[[np.ndarray], np.ndarray]
    tail: Callable[[float], float] = field(default=None)  # P(|X| > d)

    def validate(self, rtol: float = 1e-10) -> dict:
        """Numerical check of the density contract; returns the measured values."""
        mass, _ = integrate.quad(lambda x: float(self.pdf(np.array([x]))[0]),
                                 -np.inf, np.inf, limit=400)
        mom, _ = integrate.quad(
            lambda x: abs(x) ** self.alpha * float(self.pdf(np.array([x]))[0]),
            -np.inf, np.inf, limit=400)
        f0 = float(self.fourier(np.array([0.0]))[0])
        if abs(mass - 1.0) > rtol * 10:
            raise ValueError(f"{self.kind}: density mass {mass} != 1")
        if not np.isfinite(mom):
            raise ValueError(f"{self.kind}: moment of order {self.alpha} diverges")
        if abs(f0 - 1.0) > 1e-9:
            raise ValueError(f"{self.kind}: fourier(0) = {f0} != 1")
        return {"mass": mass, "moment": mom, "fourier0": f0}


def gaussian_mollifier() -> Mollifier:
    """Self-dual gaussian density exp(-pi x^2); entire, all moments finite."""
    sq = math.sqrt(math.pi)
    return Mollifier(
        kind="gaussian",
        alpha=2.0,
        strip=math.inf,
        pdf=lambda x: np.exp(-math.pi * np.asarray(x, float) ** 2),
        fourier=lambda k: np.exp(-math.pi * np.asarray(k, float) ** 2),
        cdf=lambda x: 0.5 * (1.0 + erf(sq * np.asarray(x, float))),
        tail=lambda d: float(1.0 - erf(sq * d)),
    )


def cauchy_mollifier() -> Mollifier:
    """Standard Cauchy density; heavy-tailed, in D_alpha only for alpha < 1."""
    return Mollifier(
        kind="cauchy_like",
        alpha=0.5,
        strip=1.0,
        pdf=lambda x: 1.0 / (math.pi * (1.0 + np.asarray(x, float) ** 2)),
        fourier=lambda k: np.exp(-2.0 * math.pi * np.abs(np.asarray(k, float))),
        cdf=lambda x: 0.5 + np.arctan(np.asarray(x, float)) / math.pi,
        tail=lambda d: float(1.0 - 2.0 * math.atan(d) / math.pi),
    )


def _bump_tables():
    # Normalized C exp(-1/(1-x^2)) on (-1, 1); FT and CDF tabulated once.
    n = 1 << 15
    dx = 4.0 / n
    x = -2.0 + dx * np.arange(n)
    inside = np.abs(x) < 1.0
    vals = np.zeros(n)
    vals[inside] = np.exp(-1.0 / (1.0 - x[inside] ** 2))
    mass = np.trapz(vals, dx=dx)
    vals /= mass
    # cdf on the support grid
    cdf_vals = np.concatenate([[0.0], np.cumsum(0.5 * (vals[1:] + vals[:-1]) * dx)])
    cdf_vals /= cdf_vals[-1]
    # FT by zero-padded FFT: dk = 1/(npad*dx)
    npad = 1 << 19
    buf = np.zeros(npad)
    buf[:n] = vals
    spec = np.fft.rfft(buf) * dx
    k = np.arange(spec.size) / (npad * dx)
    phase = np.exp(-2j * np.pi * k * (-2.0))
    ft = (spec * phase).real  # even real density -> real FT
    keep = k <= 2048.0
    return x, vals, cdf_vals, k[keep], ft[keep]


_bump_cache = None


def bump_mollifier() -> Mollifier:
    """C^inf bump supported on [-1, 1]; compactly supported, not analytic.

    The Fourier transform has no closed form and is tabulated once by FFT.
    """
    global _bump_cache
    if _bump_cache is None:
        _bump_cache = _bump_tables()
    xg, pdfg, cdfg, kg, ftg = _bump_cache
    ft_spline = CubicSpline(kg, ftg)
    kmax = kg[-1]

    def pdf(x):
        return np.interp(np.asarray(x, float), xg, pdfg, left=0.0, right=0.0)

    def fourier(k):
        k = np.abs(np.asarray(k, float))
        return np.where(k <= kmax, ft_spline(np.minimum(k, kmax)), 0.0)

    def cdf(x):
        return np.interp(np.asarray(x, float), xg, cdfg, left=0.0, right=1.0)

    def tail(d):
        if d >= 1.0:
            return 0.0
        return float(2.0 * (1.0 - np.interp(d, xg, cdfg)))

    return Mollifier(kind="smooth_bump", alpha=2.0, strip=None,
                     pdf=pdf, fourier=fourier, cdf=cdf, tail=tail)


def q_kernel(x, ell: float = 1.0):
    """Stationary covariance Q(x) = -log|x| + (1/2) log|ell^2 - x^2|, x != 0, +-ell."""
    x = np.asarray(x, dtype=float)
    if np.any(x == 0.0) or np.any(np.abs(np.abs(x) - ell) == 0.0):
        raise ValueError("Q has poles at 0 and +-ell")
    out = -np.log(np.abs(x)) + 0.5 * np.log(np.abs(ell * ell - x * x))
    return float(out) if out.ndim == 0 else out


def q_eps(x, eps: float, ell: float = 1.0):
    """Clamped kernel -log(eps/2pi v |x|) + log(eps/2pi v sqrt|ell^2-x^2|)."""
    x = np.asarray(x, dtype=float)
    floor = eps / (2.0 * math.pi)
    first = np.maximum(floor, np.abs(x))
    second = np.maximum(floor, np.sqrt(np.abs(ell * ell - x * x)))
    out = -np.log(first) + np.log(second)
    return float(out) if out.ndim == 0 else out


def q_hat(kappa, ell: float = 1.0):
    """Spectral density sin^2(pi ell k)/|k|, extended by continuity (0) at k = 0."""
    k = np.asarray(kappa, dtype=float)
    out = np.zeros_like(k)
    nz = k != 0.0
    out[nz] = np.sin(math.pi * ell * k[nz]) ** 2 / np.abs(k[nz])
    return float(out) if out.ndim == 0 else out


def _safe_ratio(phi_fn, kappa):
    # (Phi(k) - 1)/k with the removable limit at k -> 0
    k = max(kappa, 1e-9)
    return (phi_fn(k) - 1.0) / k


def cin_error_term(omega: float, phi_fn, full_output: bool = False):
    """E_Phi(w) = int_0^inf (1 - cos(w k)) (Phi(k) - 1_{k<=1}) / k dk.

    ``phi_fn`` is the scalar frequency profile with Phi(0) = 1 and an
    integrable (Phi - 1_{k<=1})/k.  Raises if the tail quadrature does not
    converge.
    """
    omega = abs(float(omega))
    inner = lambda k: _safe_ratio(phi_fn, k)
    outer = lambda k: phi_fn(k) / k

    a1, e1 = integrate.quad(inner, 0.0, 1.0, epsabs=_QUAD_TOL, limit=200)
    a2, e2 = integrate.quad(outer, 1.0, np.inf, epsabs=_QUAD_TOL, limit=200)
    if omega == 0.0:
        return (0.0, e1 + e2) if full_output else 0.0
    b1, e3 = integrate.quad(inner, 0.0, 1.0, weight="cos", wvar=omega,
                            epsabs=_QUAD_TOL, limit=200)
    b2, e4 = integrate.quad(outer, 1.0, np.inf, weight="cos", wvar=omega,
                            limit=200)
    err = e1 + e2 + e3 + e4
    if not np.isfinite(a2) or e2 > 1e-6:
        raise RuntimeError(f"divergent tail in E_Phi (error estimate {e2:g})")
    val = (a1 + a2) - (b1 + b2)
    return (val, err) if full_output else val


def _product_profile(phi: Mollifier, psi: Mollifier, eps: float, delta: float):
    def prof(k):
        return float(phi.fourier(eps * k) * psi.fourier(delta * k))
    return prof


def t_exact(u: float, v: float, eps: float, delta: float,
            phi: Mollifier, psi: Mollifier, ell: float = 1.0,
            full_output: bool = False):
    """Exact mollified covariance T_{eps,delta}(u, v) = E[G_{phi,eps}(u) G_{psi,delta}(v)].

    Computed by the cosine-integral decomposition; absolute accuracy is the
    accumulated quadrature error (reported with ``full_output``).
    """
    if eps <= 0.0 or delta <= 0.0:
        raise ValueError("eps and delta must be positive")
    prof = _product_profile(phi, psi, eps, delta)
    s = u - v
    args = (2.0 * math.pi * s, 2.0 * math.pi * (ell + s), 2.0 * math.pi * (ell - s))
    coefs = (-1.0, 0.5, 0.5)
    val, err = 0.0, 0.0
    for c, w in zip(coefs, args):
        e, de = cin_error_term(w, prof, full_output=True)
        val += c * (float(cin(w)) + e)
        err += abs(c) * de
    if err > 1e-6:
        raise RuntimeError(f"covariance quadrature did not converge (err {err:g})")
    return (val, err) if full_output else val


def t_quadrature(u: float, v: float, eps: float, delta: float,
                 phi: Mollifier, psi: Mollifier, ell: float = 1.0):
    """Brute-force oscillatory quadrature of the same covariance integral.

    Independent cross-check for ``t_exact``; slower and a little less
    accurate near the diagonal.
    """
    s = u - v

    def integrand(k):
        return (2.0 * math.cos(2.0 * math.pi * s * k)
                * math.sin(math.pi * ell * k) ** 2
                * float(phi.fourier(eps * k) * psi.fourier(delta * k)) / k)

    # upper cutoff where both mollifier transforms are numerically dead
    kmax = 60.0 / min(eps, delta)
    pieces = np.unique(np.concatenate([
        np.linspace(0.0, 4.0, 17),
        np.geomspace(4.0, kmax, 40),
    ]))
    total = 0.0
    for a, b in zip(pieces[:-1], pieces[1:]):
        val, _ = integrate.quad(integrand, a, b, limit=400, epsabs=1e-11,
                                epsrel=1e-11)
        total += val
    return total


class CovarianceTable:
    """Cubic-spline table of s -> T_{eps,delta}(0, s) for fast vectorized use.

    Interpolates the bounded remainder T - Q_{eps v delta} so the
    log-singular shape is carried by the closed form.
    """

    def __init__(self, eps: float, delta: float, phi: Mollifier, psi: Mollifier,
                 ell: float = 1.0, s_max: float = 4.0, n: int = 257):
        self.eps, self.delta, self.ell = eps, delta, ell
        reg = max(eps, delta)
        # cluster nodes near 0 and place nodes on the clamp kinks of q_eps
        rp = reg / (2.0 * math.pi)
        kinks = [rp]
        if ell * ell > rp * rp:
            kinks.append(math.sqrt(ell * ell - rp * rp))
        kinks.append(math.sqrt(ell * ell + rp * rp))
        kinks = np.array([k for k in kinks if k <= s_max])
        s = np.unique(np.concatenate([
            np.linspace(0.0, s_max, n),
            np.geomspace(max(reg / 256.0, 1e-8), min(1.0, s_max), 97),
            kinks,
            kinks[:, None] + rp * np.linspace(-0.9, 0.9, 7)[None, :],
            ell + np.linspace(-0.05, 0.05, 21) if ell < s_max else np.empty(0),
        ], axis=None))
        s = s[(s >= 0.0) & (s <= s_max)]
        vals = np.array([t_exact(x, 0.0, eps, delta, phi, psi, ell) for x in s])
        self._spline = CubicSpline(s, vals - q_eps(s, reg, ell))
        self.s_max = s_max

    def __call__(self, s):
        s = np.abs(np.asarray(s, dtype=float))
        if np.any(s > self.s_max):
            raise ValueError("separation outside tabulated range")
        reg = max(self.eps, self.delta)
        return self._spline(s) + q_eps(s, reg, self.ell)
