#!/usr/bin/env python3

"""
A module for the short-range Hamiltonian H^(s) in the Coulomb-Sturmian basis.

The potential is represented on n_big functions, inverted, truncated to n_short
functions and inverted back. The truncated inverse of the inverse is the Schur
complement A11 - A12 A22^-1 A21 of the trailing block, which is what is computed.
"""

# stdlib modules
import logging
import functools
from dataclasses import dataclass

# third party modules
import numpy as np

# inner modules
from basis.sturmian import CsBasisSpec
from basis.quadrature import quadratureMatrix
from hamiltonian import const
from potentials.models import PotentialModel, ShortRangeTerm, sumOfTerms

# exceptions
from potentials.exceptions import *

# typing
from typing import Optional, Tuple

DEFAULT_COND_LIMIT = 1e12

@dataclass(frozen=True)
class ShortRangeMatrix:
    """
    H^(s) on the truncated basis, with the component index fastest.

    :param rank: number of CS functions it acts on
    :param dense_block: (rank * components) square matrix
    :param components: 2 on the Feshbach-Villars path, 1 otherwise
    """

    rank: int
    dense_block: np.ndarray
    components: int = 1

    @property
    def isZero (self) -> bool:
        return not np.any(self.dense_block)

    def pseudoHermiticityDefect (self) -> float:
        """ Returns max |tau_3 M^T tau_3 - M| (M is real). """
        if self.components == 1:
            return float(np.max(np.abs(self.dense_block.T - self.dense_block), initial=0.0))
        tau = np.kron(np.eye(self.rank), const.TAU_3)
        return float(np.max(np.abs(tau @ self.dense_block.T @ tau - self.dense_block), initial=0.0))

def shortRangeMatrixRaw (terms: Tuple[ShortRangeTerm, ...], spec: CsBasisSpec, size: int) -> np.ndarray:
    """
    Returns <n| v |n'> for n, n' < size by Gauss-Laguerre quadrature.

    :param terms: short-range terms of one channel
    :param spec: basis specification
    :param size: number of CS functions
    """
    if not terms:
        return np.zeros((size, size))
    return quadratureMatrix(spec, size, sumOfTerms(terms))

def lowRankMatrix (rawBig: np.ndarray, nShort: int, condLimit: float = DEFAULT_COND_LIMIT,
                   channel: str = 'v4') -> np.ndarray:
    """
    Returns W = ((rawBig^-1) truncated to nShort)^-1.

    :param rawBig: real symmetric potential matrix on the large basis
    :param nShort: size of the result
    :param condLimit: above this condition number the plain truncation is returned
    :param channel: channel name for messages
    """

    rawBig = np.asarray(rawBig, dtype=float)
    nBig = rawBig.shape[0]
    if not 0 < nShort <= nBig:
        raise InvalidRankException(nShort, nBig)

    if not np.any(rawBig):
        raise DegeneratePotentialException(channel, float('inf'))
    if nShort == nBig:
        return rawBig.copy()

    condition = float(np.linalg.cond(rawBig))
    if not condition <= condLimit:
        logging.warning(f'Short-range matrix of channel {channel} has condition {condition:.3e} > {condLimit:.1e}; '
                        f'using the plain truncation.')
        return rawBig[:nShort, :nShort].copy()

    a11 = rawBig[:nShort, :nShort]
    a12 = rawBig[:nShort, nShort:]
    a21 = rawBig[nShort:, :nShort]
    a22 = rawBig[nShort:, nShort:]
    w = a11 - a12 @ np.linalg.solve(a22, a21)
    return 0.5 * (w + w.T)

def lowRankRepresentation (rawBig: np.ndarray, nShort: int, structure: Optional[np.ndarray] = None,
                           condLimit: float = DEFAULT_COND_LIMIT, channel: str = 'v4') -> ShortRangeMatrix:
    """
    Returns the low-rank matrix of one channel with its component structure applied
    (identity for the vector channel, tau_3 + i tau_2 for the scalar one).

    :param rawBig: potential matrix on the large basis
    :param nShort: rank of the result
    :param structure: 2x2 component structure, None on the Schroedinger path
    :param condLimit: conditioning guard
    :param channel: channel name for messages
    """
    w = lowRankMatrix(rawBig, nShort, condLimit, channel)
    if structure is None:
        return ShortRangeMatrix(rank=nShort, dense_block=w, components=1)
    return ShortRangeMatrix(rank=nShort, dense_block=np.kron(w, structure), components=structure.shape[0])

@functools.lru_cache(maxsize=32)
def shortRangeMatrix (model: PotentialModel, spec: CsBasisSpec, relativistic: bool, groupSize: int = 1,
                      condLimit: float = DEFAULT_COND_LIMIT, lowRank: bool = True) -> ShortRangeMatrix:
    """
    Returns H^(s) = (tau_3 + i tau_2) W0 + W4 on n_short * groupSize CS functions
    (W0 + W4 on the Schroedinger path). A degenerate channel is left out.

    :param model: potential model
    :param spec: basis specification
    :param relativistic: Feshbach-Villars or Schroedinger path
    :param groupSize: CS functions per block of the long-range operator
    :param condLimit: conditioning guard of the low-rank scheme
    :param lowRank: use the low-rank scheme; otherwise the plain n_short matrix
    """

    nShort = spec.n_short * groupSize
    nBig = spec.n_big * groupSize if lowRank else nShort
    components = 2 if relativistic else 1
    total = np.zeros((nShort * components, nShort * components))

    channels = (('v4', model.v4_short, const.IDENTITY_2), ('v0', model.v0_short, const.KINETIC_TAU))
    for channel, terms, structure in channels:
        if not terms:
            continue
        logging.info(f'Building short-range matrix of channel {channel} on {nBig} CS functions.')
        raw = shortRangeMatrixRaw(terms, spec, nBig)
        try:
            part = lowRankRepresentation(raw, nShort, structure if relativistic else None, condLimit, channel)
        except DegeneratePotentialException as e:
            logging.warning(f'{e.message} Leaving channel {channel} out.')
            continue
        total += part.dense_block

    total.setflags(write=False)
    return ShortRangeMatrix(rank=nShort, dense_block=total, components=components)
