"""mesochaos: multiplicative chaos from regularized random-matrix counting statistics.

Library layout:

- ``specfun``        closed-form special functions, Selberg/Dyson integrals
- ``transforms``     Fourier / Hilbert / Cauchy transforms, H^{1/2} inner products
- ``covariance``     mollifiers and the exact regularized covariance T_{eps,delta}
- ``gaussian_field`` spectral synthesis of the log-correlated field and its chaos
- ``cue``            CUE sampling, Toeplitz determinants, Borodin-Okounkov identity
- ``sine``           sine-process Fredholm determinants, DPP sampler, chaos measure
- ``harness``        experiment specs, CSV/JSON persistence, figures (CLI: mesochaos)
"""

from . import specfun, transforms, covariance, gaussian_field, cue, sine  # noqa: F401

__version__ = "0.1.0"
