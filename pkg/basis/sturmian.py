#!/usr/bin/env python3

"""
A module for the Coulomb-Sturmian basis

    <r|n> = sqrt(n! / (n+2l+1)!) exp(-b r) (2 b r)^(l+1) L_n^(2l+1)(2 b r)

and the exact matrix elements of 1/r, the overlap, p^2, r and r^2.
"""

# stdlib modules
import functools
from dataclasses import dataclass

# third party modules
import numpy as np
from scipy.special import gammaln

# inner modules
from basis.banded import BandedSymmetric

# exceptions
from basis.exceptions import *

# typing
from typing import Optional, Tuple, Union

# typedef
ArrayLike = Union[float, np.ndarray]

# rescale the Laguerre recurrence once values leave this range
_RESCALE_LIMIT = 1e100

@dataclass(frozen=True)
class CsBasisSpec:
    """
    Identifies a Coulomb-Sturmian representation.

    :param l: orbital angular momentum
    :param b: scale parameter (1/length)
    :param n_short: size of the short-range representation (in blocks)
    :param n_big: size of the larger basis used by the low-rank scheme, defaults to 4 * n_short
    :param n_cf_start: block index at which the continued fraction is seeded
    """

    l: int = 0
    b: float = 1.0
    n_short: int = 32
    n_big: Optional[int] = None
    n_cf_start: int = 5000

    def __post_init__ (self) -> None:
        if self.n_big is None:
            object.__setattr__(self, 'n_big', 4 * self.n_short)

        if int(self.l) != self.l or self.l < 0:
            raise InvalidBasisSpecException('l', self.l)
        if not self.b > 0:
            raise InvalidBasisSpecException('b', self.b, message=f'Scale parameter b must be positive, got {self.b!r}.')
        if self.n_short < 1:
            raise InvalidBasisSpecException('n_short', self.n_short)
        if self.n_big < self.n_short:
            raise InvalidBasisSpecException('n_big', self.n_big, message=f'n_big = {self.n_big} must not be smaller than n_short = {self.n_short}.')
        if self.n_cf_start <= self.n_big:
            raise InvalidBasisSpecException('n_cf_start', self.n_cf_start, message=f'n_cf_start = {self.n_cf_start} must exceed n_big = {self.n_big}.')

    @property
    def alpha (self) -> int:
        """ Laguerre parameter 2l+1. """
        return 2 * self.l + 1

def laguerreTable (x: np.ndarray, alpha: float, count: int, keep: int = 0,
                   derivative: bool = False) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Runs the three-term recurrence of the orthonormal Laguerre polynomials

        p_n(x) = sqrt(n! / Gamma(n+alpha+1)) L_n^alpha(x)

    with a per-node running scale so that no value over- or underflows.

    Returns (logAbs, sign, logNormSq, ratio):
      logAbs, sign : shape (keep, len(x)), log|p_n(x)| and sign of p_n(x) for n < keep
      logNormSq    : log of sum_{n<count} p_n(x)^2
      ratio        : p_count(x) / p'_count(x) when `derivative` is set, else None

    :param x: evaluation points
    :param alpha: Laguerre parameter
    :param count: number of polynomials entering logNormSq
    :param keep: number of polynomials to tabulate
    :param derivative: whether to carry the derivative for a Newton step on p_count
    """

    x = np.atleast_1d(np.asarray(x, dtype=float))
    steps = max(count, keep - 1)

    logAbs = np.empty((keep, x.size))
    sign = np.empty((keep, x.size))

    logScale = np.full(x.size, -0.5 * gammaln(alpha + 1.0))
    pPrev = np.zeros(x.size)
    p = np.ones(x.size)
    dPrev = np.zeros(x.size)
    d = np.zeros(x.size)

    if keep > 0:
        logAbs[0] = logScale
        sign[0] = 1.0
    logNormSq = 2.0 * logScale if count > 0 else np.full(x.size, -np.inf)

    with np.errstate(divide='ignore'):
        for k in range(steps):
            a = 2.0 * k + alpha + 1.0 - x
            up = np.sqrt((k + 1.0) * (k + 1.0 + alpha))
            down = np.sqrt(k * (k + alpha))

            pNext = (a * p - down * pPrev) / up
            if derivative:
                dNext = (a * d - p - down * dPrev) / up
                dPrev, d = d, dNext
            pPrev, p = p, pNext

            magnitude = np.maximum(np.abs(p), np.abs(pPrev))
            if derivative:
                magnitude = np.maximum(magnitude, np.maximum(np.abs(d), np.abs(dPrev)))
            big = magnitude > _RESCALE_LIMIT
            if np.any(big):
                factor = magnitude[big]
                p[big] /= factor
                pPrev[big] /= factor
                d[big] /= factor
                dPrev[big] /= factor
                logScale[big] += np.log(factor)

            logP = np.log(np.abs(p)) + logScale
            if k + 1 < keep:
                logAbs[k + 1] = logP
                sign[k + 1] = np.sign(p)
            if k + 1 < count:
                logNormSq = np.logaddexp(logNormSq, 2.0 * logP)

    ratio = p / d if derivative else None
    return logAbs, sign, logNormSq, ratio

def csFunctions (spec: CsBasisSpec, nMax: int, r: ArrayLike) -> np.ndarray:
    """
    Returns <r|n> for n = 0..nMax as an array of shape (nMax + 1, len(r)).

    :param spec: basis specification
    :param nMax: largest index
    :param r: positive radii
    """

    r = np.atleast_1d(np.asarray(r, dtype=float))
    if nMax < 0 or np.any(r <= 0):
        raise BasisDomainException(nMax, float(np.min(r)) if r.size else 0.0)

    x = 2.0 * spec.b * r
    logAbs, sign, _, _ = laguerreTable(x, spec.alpha, count=0, keep=nMax + 1)
    envelope = -0.5 * x + (spec.l + 1) * np.log(x)
    return sign * np.exp(logAbs + envelope)

def csFunction (spec: CsBasisSpec, n: int, r: float) -> float:
    """
    Returns <r|n>.

    :param spec: basis specification
    :param n: basis index
    :param r: radius, r > 0
    """
    if n < 0 or not r > 0:
        raise BasisDomainException(n, r)
    return float(csFunctions(spec, n, r)[n, 0])

def _indices (size: int) -> np.ndarray:
    if size < 1:
        raise MatrixSizeException(size, f'Matrix size must be positive, got {size}.')
    return np.arange(size, dtype=float)

@functools.lru_cache(maxsize=64)
def overlapMatrix (spec: CsBasisSpec, size: int) -> BandedSymmetric:
    """ <n|n'>, bandwidth 1. """
    n = _indices(size)
    l, b = spec.l, spec.b
    m = n + 1
    bands = np.zeros((2, size))
    bands[0] = (n + l + 1) / b
    bands[1] = -np.sqrt(m * (m + 2 * l + 1)) / (2 * b)
    return BandedSymmetric(bands)

@functools.lru_cache(maxsize=64)
def p2Matrix (spec: CsBasisSpec, size: int) -> BandedSymmetric:
    """ <n|p^2|n'> with p^2 = -d^2/dr^2 + l(l+1)/r^2 (hbar = 1), bandwidth 1. """
    n = _indices(size)
    l, b = spec.l, spec.b
    m = n + 1
    bands = np.zeros((2, size))
    bands[0] = (n + l + 1) * b
    bands[1] = np.sqrt(m * (m + 2 * l + 1)) * b / 2
    return BandedSymmetric(bands)

@functools.lru_cache(maxsize=64)
def inverseRMatrix (spec: CsBasisSpec, size: int) -> BandedSymmetric:
    """ <n|1/r|n'> = delta(n, n'). """
    return BandedSymmetric(np.ones((1, len(_indices(size)))))

@functools.lru_cache(maxsize=64)
def rMatrix (spec: CsBasisSpec, size: int) -> BandedSymmetric:
    """ <n|r|n'>, bandwidth 2. """
    n = _indices(size)
    l, b = spec.l, spec.b
    bands = np.zeros((3, size))
    bands[0] = (6 * n**2 + 2 * (l + 1) * (6 * n + 2 * l + 3)) / (4 * b**2)

    m = n + 1
    bands[1] = -(2 * m + 2 * l + 1) * np.sqrt(m * (m + 2 * l + 1)) / (2 * b**2)

    m = n + 2
    bands[2] = np.sqrt(m * (m - 1) * (m + 2 * l) * (m + 2 * l + 1)) / (4 * b**2)
    return BandedSymmetric(bands)

@functools.lru_cache(maxsize=64)
def r2Matrix (spec: CsBasisSpec, size: int) -> BandedSymmetric:
    """ <n|r^2|n'>, bandwidth 3. """
    n = _indices(size)
    l, b = spec.l, spec.b
    scale = 8 * b**3
    bands = np.zeros((4, size))
    bands[0] = (((10 * n + 2 * l + 4) * (n + 2 * l + 3) + 9 * n * (n - 1)) * (n + 2 * l + 2)
                + n * (n - 1) * (n - 2)) / scale

    m = n + 1
    bands[1] = -((4 * m + 2 * l) * (m + 2 * l + 2) + (m - 1) * (m - 2)) \
        * np.sqrt(m * (m + 2 * l + 1)) * 3 / scale

    m = n + 2
    bands[2] = (2 * m + 2 * l) * np.sqrt(m * (m - 1) * (m + 2 * l + 1) * (m + 2 * l)) * 3 / scale

    m = n + 3
    bands[3] = -np.sqrt(m * (m - 1) * (m - 2) * (m + 2 * l + 1) * (m + 2 * l) * (m + 2 * l - 1)) / scale
    return BandedSymmetric(bands)
