#!/usr/bin/env python3

"""
A module for the backward matrix continued fraction

    C_k = (J_{k,k} - J_{k,k+1} C_{k+1} J_{k+1,k})^-1

evaluated for one energy or a batch of energies at once.
"""

# stdlib modules
import logging
from enum import Enum
from dataclasses import dataclass

# third party modules
import numpy as np

# inner modules
from hamiltonian.assembly import LongRangeOperator

# exceptions
from green.exceptions import *

# typing
from typing import Union

# typedef
Energy = Union[complex, np.ndarray]

class SeedPolicy(str, Enum):
    """ How the continued fraction is started at its deepest level. """

    ZERO = 'zero'
    COULOMB_TAIL = 'coulomb_tail'

@dataclass(frozen=True)
class GreenResult:
    """
    The bracket (G^(l))^-1 on the truncated basis.

    :param g_inverse: J truncated to n_short blocks with the corner correction subtracted
    :param corner_correction: J_{N-1,N} C_N J_{N,N-1}
    :param depth_used: deepest block index of the continued fraction
    :param converged: corner correction stable between half and full depth
    :param change: relative change of the corner correction between half and full depth
    """

    g_inverse: np.ndarray
    corner_correction: np.ndarray
    depth_used: int
    converged: bool
    change: float = float('nan')

def continuedFraction (operator: LongRangeOperator, nStart: int, nStop: int, seed: np.ndarray, eps: Energy) -> np.ndarray:
    """
    Returns C_nStop from the seed C_{nStart + 1} by backward recursion.

    With an array of energies the blocks carry a leading batch axis, shape (nE, d, d).

    :param operator: block tables of J
    :param nStart: deepest level that is inverted
    :param nStop: level that is returned
    :param seed: C_{nStart + 1}, shape (d, d) or (nE, d, d)
    :param eps: energy measured from the rest energy, scalar or 1-d array
    """

    if nStart < nStop:
        raise InvalidDepthException(nStart, nStop)

    c = np.asarray(seed, dtype=complex)
    eps = np.asarray(eps, dtype=complex)
    if eps.ndim and c.ndim == 2:
        c = np.broadcast_to(c, eps.shape + c.shape)

    for k in range(nStart, nStop - 1, -1):
        block = operator.diag(k, eps) - operator.upper(k, eps) @ c @ operator.lower(k, eps)
        try:
            c = np.linalg.inv(block)
        except np.linalg.LinAlgError as e:
            raise SingularBlockException(k) from e
        if not np.all(np.isfinite(c)):
            raise SingularBlockException(k)

    return c

def cornerCorrection (operator: LongRangeOperator, nBlocks: int, cNext: np.ndarray, eps: Energy) -> np.ndarray:
    """
    Returns J_{N-1,N} C_N J_{N,N-1} for a truncation to N = nBlocks blocks.

    :param operator: block tables of J
    :param nBlocks: number of blocks of the truncated J
    :param cNext: C_N from the continued fraction
    :param eps: energy measured from the rest energy
    """
    return operator.upper(nBlocks - 1, eps) @ cNext @ operator.lower(nBlocks - 1, eps)

def relativeChange (current: np.ndarray, previous: np.ndarray) -> float:
    """ Returns max |current - previous| / max |current|, over a batch if given. """
    scale = float(np.max(np.abs(current)))
    if scale == 0.0:
        return float(np.max(np.abs(previous)))
    change = float(np.max(np.abs(current - previous))) / scale
    logging.debug(f'Corner correction changed by {change:.3e}.')
    return change
