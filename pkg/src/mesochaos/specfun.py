"""Closed-form special functions and exact moment integrals.

Ground-truth layer used everywhere else: log-gamma, Barnes G, the cosine
integrals Cin/Ci, and the explicit values of the Selberg/Dyson integrals
that give the moments of the limiting chaos measure.  Every integral
evaluator also exposes its log-value, since the moment products overflow
quickly in q.

Conventions
-----------
``ci`` is the even cosine integral with value +inf at 0,

    Ci(x) = int_1^inf cos(x t)/t dt  =  -Ci_std(|x|),

so that ``cin(w) = ci(w) + log|w| + euler_gamma`` for w != 0, where

    Cin(w) = int_0^w (1 - cos z)/z dz.

The Selberg integral here is the one with *negative* Vandermonde power,

    S(n; g) = int_{[0,1]^n} prod_{i<j} |u_i - u_j|^{-2g} du,

convergent iff n*g < 1.
"""

import math

import numpy as np
from scipy.special import gammaln, sici

__all__ = [
    "EULER_GAMMA",
    "log_gamma",
    "cin",
    "ci",
    "log_barnes_g",
    "barnes_g",
    "fk_constant",
    "selberg_unit",
    "selberg_interval_moment",
    "dyson_circle",
]

# Euler-Mascheroni constant to 20 digits.
EULER_GAMMA = 0.57721566490153286061

# log of the Glaisher-Kinkelin constant; zeta'(-1) = 1/12 - _LOG_A.
_LOG_A = 0.24875447703378425881

# B_{2k+2} / (2k (2k+1) (2k+2)) for k = 1..6, the asymptotic tail of log G.
_BARNES_TAIL = (
    -1.0 / 720.0,
    1.0 / 5040.0,
    -1.0 / 10080.0,
    1.0 / 9504.0,
    -691.0 / 3603600.0,
    1.0 / 1872.0,
)

# Shift the argument at least this far into the asymptotic regime.
_BARNES_SHIFT = 21.0


def log_gamma(x):
    """log Gamma(x) for x > 0 (standard 15-digit rational approximation)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma requires x > 0")
    out = gammaln(x)
    return float(out) if out.ndim == 0 else out


def _cin_series(w2):
    # Cin(w) = sum_{n>=1} (-1)^{n+1} w^{2n} / (2n (2n)!), |w| <= 4.
    out = np.zeros_like(w2)
    term = np.ones_like(w2)
    for n in range(1, 30):
        term = term * w2 / ((2 * n - 1) * (2 * n))
        out += ((-1) ** (n + 1)) * term / (2 * n)
        if np.all(np.abs(term) < 1e-18 * (1.0 + np.abs(out)) * 2 * n):
            break
    return out


def cin(omega):
    """Entire even cosine integral Cin(w) = int_0^w (1-cos z)/z dz."""
    w = np.abs(np.asarray(omega, dtype=float))
    out = np.empty_like(w)
    small = w <= 4.0
    if np.any(small):
        out[small] = _cin_series(w[small] ** 2)
    if np.any(~small):
        wl = w[~small]
        ci_std = sici(wl)[1]
        out[~small] = EULER_GAMMA + np.log(wl) - ci_std
    return float(out) if out.ndim == 0 else out


def ci(x):
    """Even cosine integral Ci(x) = int_1^inf cos(xt)/t dt, x != 0."""
    xa = np.abs(np.asarray(x, dtype=float))
    if np.any(xa == 0.0):
        raise ValueError("ci is +inf at 0")
    out = -sici(xa)[1]
    return float(out) if out.ndim == 0 else out


def log_barnes_g(z: float) -> float:
    """log G(z) for z > 0, with G the Barnes function, G(z+1) = Gamma(z) G(z)."""
    if z <= 0.0:
        raise ValueError("log_barnes_g requires z > 0")
    # Recurrence shift into the asymptotic regime: log G(z) =
    # log G(z + n) - sum_{j<n} log Gamma(z + j).
    n = max(0, int(math.ceil(_BARNES_SHIFT - z)))
    shift = sum(float(gammaln(z + j)) for j in range(n))
    y = z + n - 1.0  # expansion below is for log G(y + 1)
    tail = 0.0
    y2 = y * y
    p = y2
    for c in _BARNES_TAIL:
        tail += c / p
        p *= y2
    logg = (
        0.25 * y2
        + y * float(gammaln(y + 1.0))
        - (0.5 * y * (y + 1.0) + 1.0 / 12.0) * math.log(y)
        - _LOG_A
        + tail
    )
    return logg - shift


def barnes_g(z: float) -> float:
    """Barnes G(z) for z > 0."""
    return math.exp(log_barnes_g(z))


def fk_constant(gamma: float, q: int, log: bool = False):
    """Barnes-G constant G(1 + gamma/sqrt2)^(2q) / G(1 + gamma sqrt2)^q.

    This is the multiplicative constant appearing in the conjectured
    total-mass moments of the circular log-correlated field.  Exposed for
    tabulation; nothing in this package asserts the conjecture beyond the
    proven cases.
    """
    s = math.sqrt(2.0)
    val = 2 * q * log_barnes_g(1.0 + gamma / s) - q * log_barnes_g(1.0 + gamma * s)
    return val if log else math.exp(val)


def selberg_unit(n: int, gt: float, log: bool = False):
    """Selberg integral int_{[0,1]^n} prod_{i != j} |u_i - u_j|^{-gt} du.

    The ordered-pair product means each unordered pair contributes the
    power -2*gt.  Convergent iff n*gt < 1.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    if gt < 0.0:
        raise ValueError("gt must be non-negative")
    if n * gt >= 1.0:
        raise ValueError(f"divergent: n*gt = {n * gt:g} >= 1")
    total = 0.0
    for j in range(n):
        total += (
            2.0 * float(gammaln(1.0 - j * gt))
            + float(gammaln(1.0 - (j + 1) * gt))
            - float(gammaln(1.0 - gt))
            - float(gammaln(2.0 - (n + j - 1) * gt))
        )
    return total if log else math.exp(total)


def selberg_interval_moment(q: int, gamma: float, r: float, log: bool = False):
    """Exact q-th moment integral int_{[0,r]^q} |Delta(u)|^{-gamma^2} du.

    Equals r^(q - gamma^2 q(q-1)/2) * S(q; gamma^2/2); this is the limit of
    the (arc-length normalized) chaos mass moments.  Requires gamma^2 q < 2.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if r <= 0.0:
        raise ValueError("r must be positive")
    g2 = gamma * gamma
    if g2 * q >= 2.0:
        raise ValueError(f"divergent: gamma^2 * q = {g2 * q:g} >= 2")
    expo = q - 0.5 * g2 * q * (q - 1)
    val = expo * math.log(r) + selberg_unit(q, 0.5 * g2, log=True)
    return val if log else math.exp(val)


def dyson_circle(q: int, gamma: float, log: bool = False):
    """Circular Dyson integral int_{[0,2pi]^q} prod_{j<k} |e^{i a_j} - e^{i a_k}|^{-gamma^2} da.

    Value (2 pi)^q Gamma(1 - gamma^2 q / 2) / Gamma(1 - gamma^2 / 2)^q,
    convergent iff gamma^2 q < 2.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    g2 = gamma * gamma
    if g2 * q >= 2.0:
        raise ValueError(f"divergent: gamma^2 * q = {g2 * q:g} >= 2")
    val = (
        q * math.log(2.0 * math.pi)
        + float(gammaln(1.0 - 0.5 * g2 * q))
        - q * float(gammaln(1.0 - 0.5 * g2))
    )
    return val if log else math.exp(val)
