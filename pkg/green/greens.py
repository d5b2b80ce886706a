#!/usr/bin/env python3

"""
A module for the inverse of the long-range Green's matrix

    (G^(l))^-1 = J - delta_{iN} delta_{jN} J_{N,N+1} C_{N+1} J_{N+1,N}

on a basis truncated to n_short blocks. Only the lower-right block of J changes.
"""

# stdlib modules
import logging

# third party modules
import numpy as np

# inner modules
from basis.sturmian import CsBasisSpec
from hamiltonian.assembly import longRangeOperator
from hamiltonian.physics import PhysicalConstants, LongRangeSpec
from green import tail as tails
from green.fraction import SeedPolicy, GreenResult, continuedFraction, cornerCorrection, relativeChange

# exceptions
from green.exceptions import *

# typing
from typing import Optional, Union

# typedef
Energy = Union[complex, np.ndarray]

DEFAULT_CF_TOLERANCE = 1e-12

class LongRangeGreen:
    """
    Green's matrix of the long-range Hamiltonian (Coulomb plus confinement)
    on a truncated Coulomb-Sturmian basis.

    :param spec: basis specification (n_short blocks are kept, the fraction starts at n_cf_start)
    :param lr: long-range potential
    :param consts: physical constants
    :param seedPolicy: how the fraction is started (coulomb_tail without confinement, zero otherwise)
    :param tolerance: relative corner change between half and full depth accepted as converged
    :param strict: raise ContinuedFractionConvergenceException instead of flagging
    """

    def __init__ (self, spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants,
                  seedPolicy: Optional[Union[SeedPolicy, str]] = None,
                  tolerance: float = DEFAULT_CF_TOLERANCE, strict: bool = False) -> None:

        if seedPolicy is None:
            seedPolicy = SeedPolicy.ZERO if lr.confining else SeedPolicy.COULOMB_TAIL
        try:
            seedPolicy = SeedPolicy(seedPolicy)
        except ValueError as e:
            raise InvalidSeedPolicyException(str(seedPolicy), message=f'Unknown seed policy {seedPolicy!r}.') from e
        if seedPolicy is SeedPolicy.COULOMB_TAIL and lr.confining:
            raise InvalidSeedPolicyException(seedPolicy.value)

        self.spec = spec
        self.lr = lr
        self.consts = consts
        self.seedPolicy = seedPolicy
        self.tolerance = tolerance
        self.strict = strict

        self.nShort = spec.n_short
        self.depth = max(spec.n_cf_start, 2 * self.nShort + 2)

        logging.info(f'Setting up long-range Green\'s matrix: {self.nShort} blocks of size {lr.blockDim}, '
                     f'depth {self.depth}, {seedPolicy.value} seed.')

        self.operator = longRangeOperator(spec, lr, consts, self.depth + 1)
        self.overlapDense, self.hamiltonianDense = self.operator.denseParts(self.nShort)

    @property
    def blockDim (self) -> int:
        return self.lr.blockDim

    @property
    def dimension (self) -> int:
        """ Size of the bracket matrix. """
        return self.nShort * self.blockDim

    @property
    def restEnergy (self) -> float:
        return self.lr.restEnergy(self.consts)

    def epsilon (self, energy: Energy) -> Energy:
        """ Energy measured from the rest energy (unchanged on the Schroedinger path). """
        return np.asarray(energy, dtype=complex) - self.restEnergy

    def tail (self, eps: complex) -> tails.TailBlocks:
        """
        Returns the asymptotic tail at energy eps.

        :param eps: energy measured from the rest energy
        """
        return tails.tailBlocks(self.consts, complex(eps), self.spec.b, self.lr.relativistic,
                                charge=self.lr.z * self.consts.e2)

    def seed (self, eps: Energy, nStart: int) -> np.ndarray:
        """
        Returns C_{nStart + 1} under the seed policy; a singular tail falls back to zero.

        :param eps: energy measured from the rest energy, scalar or 1-d array
        :param nStart: deepest level of the fraction
        """

        eps = np.asarray(eps, dtype=complex)
        d = self.blockDim
        zero = np.zeros(eps.shape + (d, d), dtype=complex)
        if self.seedPolicy is SeedPolicy.ZERO:
            return zero

        for index, value in np.ndenumerate(eps):
            try:
                zero[index] = self.tail(value).seed(nStart + 1, self.spec.l)
            except (SingularTailException, DefectiveSquareRootException) as e:
                logging.warning(f'{e.message} Starting the continued fraction from zero at eps = {value}.')
        return zero

    def cNext (self, eps: Energy, depth: Optional[int] = None) -> np.ndarray:
        """
        Returns C_N, N = n_short, from a fraction started at `depth`.

        :param eps: energy measured from the rest energy, scalar or 1-d array
        :param depth: deepest level (defaults to n_cf_start)
        """
        depth = self.depth if depth is None else min(depth, self.depth)
        depth = max(depth, self.nShort)
        return continuedFraction(self.operator, depth, self.nShort, self.seed(eps, depth), eps)

    def corner (self, eps: Energy, depth: Optional[int] = None) -> np.ndarray:
        """
        Returns the corner correction J_{N-1,N} C_N J_{N,N-1}.

        :param eps: energy measured from the rest energy, scalar or 1-d array
        :param depth: deepest level (defaults to n_cf_start)
        """
        eps = np.asarray(eps, dtype=complex)
        return cornerCorrection(self.operator, self.nShort, self.cNext(eps, depth), eps)

    def inverseBatch (self, energies: np.ndarray, depth: Optional[int] = None) -> np.ndarray:
        """
        Returns the brackets (G^(l))^-1 for an array of total energies, shape (nE, M, M).

        :param energies: total energies
        :param depth: deepest level of the fraction
        """
        return self.inverseBatchFromRest(self.epsilon(np.atleast_1d(energies)), depth)

    def inverseBatchFromRest (self, eps: np.ndarray, depth: Optional[int] = None) -> np.ndarray:
        """
        As inverseBatch, for energies measured from the rest energy.

        :param eps: energies minus the rest energy
        :param depth: deepest level of the fraction
        """

        eps = np.atleast_1d(np.asarray(eps, dtype=complex))
        corner = self.corner(eps, depth)

        g = eps[:, None, None] * self.overlapDense[None] - self.hamiltonianDense[None]
        d = self.blockDim
        g[:, -d:, -d:] -= corner
        return g

    def inverse (self, energy: complex, depth: Optional[int] = None, diagnose: bool = True) -> GreenResult:
        """
        Returns the bracket (G^(l))^-1 at total energy E with its convergence diagnostic.

        :param energy: total energy
        :param depth: deepest level of the fraction
        :param diagnose: compare with a fraction of half the depth
        """
        return self.inverseFromRest(complex(self.epsilon(energy)), depth, diagnose)

    def inverseFromRest (self, eps: complex, depth: Optional[int] = None, diagnose: bool = True) -> GreenResult:
        """
        As inverse, for an energy measured from the rest energy.

        :param eps: energy minus the rest energy
        :param depth: deepest level of the fraction
        :param diagnose: compare with a fraction of half the depth
        """

        depth = self.depth if depth is None else min(depth, self.depth)
        eps = complex(eps)
        corner = self.corner(eps, depth)

        g = eps * self.overlapDense - self.hamiltonianDense
        d = self.blockDim
        g[-d:, -d:] -= corner

        change = float('nan')
        converged = True
        if diagnose:
            half = max(depth // 2, self.nShort)
            change = relativeChange(corner, self.corner(eps, half))
            converged = change <= self.tolerance
            if not converged:
                if self.strict:
                    raise ContinuedFractionConvergenceException(depth, change)
                logging.debug(f'Continued fraction at eps = {eps} not converged (change {change:.3e}).')

        return GreenResult(g_inverse=g, corner_correction=corner, depth_used=depth,
                           converged=converged, change=change)

def greenInverse (spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants, energy: complex,
                  seedPolicy: Optional[Union[SeedPolicy, str]] = None, **kwargs) -> GreenResult:
    """
    Returns the bracket (G^(l))^-1 at total energy E.

    :param spec: basis specification
    :param lr: long-range potential
    :param consts: physical constants
    :param energy: total energy
    :param seedPolicy: zero or coulomb_tail (default by confinement)
    """
    return LongRangeGreen(spec, lr, consts, seedPolicy, **kwargs).inverse(energy)
