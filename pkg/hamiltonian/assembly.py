#!/usr/bin/env python3

"""
A module to assemble J = E - H^(l) for the long-range Hamiltonian in the
Coulomb-Sturmian basis.

Feshbach-Villars:  H = (tau_3 + i tau_2)(p^2/2m + alpha1 r + alpha2 r^2) + tau_3 mc^2 + Z e^2 / r
Schroedinger:      H = p^2/2m + alpha1 r + alpha2 r^2 + Z e^2 / r

Energies are measured from the rest energy, eps = E - mc^2, so that

    J = eps (S x 1) - H'   with   H' = K x (tau_3 + i tau_2) - S x diag(0, 2mc^2) + Z e^2 D x 1

The component index varies fastest inside a block.
"""

# stdlib modules
import logging
import functools
import dataclasses

# third party modules
import numpy as np

# inner modules
from basis import sturmian
from basis.sturmian import CsBasisSpec
from hamiltonian import const
from hamiltonian.blocks import BlockTridiag
from hamiltonian.physics import PhysicalConstants, LongRangeSpec

# exceptions
from hamiltonian.exceptions import *

# typing
from typing import Tuple, Union

# typedef
Energy = Union[complex, np.ndarray]

def _kron (blocks: np.ndarray, structure: np.ndarray) -> np.ndarray:
    """ Batched Kronecker product with the structure index fastest. """
    n, g, _ = blocks.shape
    s = structure.shape[0]
    return np.einsum('kac,ij->kaicj', blocks, structure).reshape(n, g * s, g * s)

class LongRangeOperator:
    """
    Energy-independent tables of the overlap and Hamiltonian blocks, from which
    J(eps) blocks are produced on demand for scalar or batched energies.

    :param spec: basis specification
    :param lr: long-range potential
    :param consts: physical constants
    :param nBlocks: number of diagonal blocks held
    """

    def __init__ (self, spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants, nBlocks: int) -> None:
        if nBlocks < 1:
            raise BlockGroupingException(nBlocks, 0)

        self.spec = spec
        self.lr = lr
        self.consts = consts
        self.nBlocks = nBlocks

        g = lr.groupSize
        size = g * (nBlocks + 1)
        logging.debug(f'Building long-range tables for {nBlocks} blocks of {g} CS functions.')

        overlap = sturmian.overlapMatrix(spec, size).blocks(g, nBlocks)
        kinetic = [consts.kineticFactor * m for m in sturmian.p2Matrix(spec, size).blocks(g, nBlocks)]
        if lr.alpha1:
            kinetic = [k + lr.alpha1 * m for k, m in zip(kinetic, sturmian.rMatrix(spec, size).blocks(g, nBlocks))]
        if lr.alpha2:
            kinetic = [k + lr.alpha2 * m for k, m in zip(kinetic, sturmian.r2Matrix(spec, size).blocks(g, nBlocks))]
        coulomb = [lr.z * consts.e2 * m for m in sturmian.inverseRMatrix(spec, size).blocks(g, nBlocks)]

        def lower (blocks: np.ndarray) -> np.ndarray:
            return blocks.transpose(0, 2, 1)

        if lr.relativistic:
            gap = np.diag([0.0, 2.0 * consts.restEnergy])

            def hamiltonian (s: np.ndarray, k: np.ndarray, d: np.ndarray) -> np.ndarray:
                return _kron(k, const.KINETIC_TAU) - _kron(s, gap) + _kron(d, const.IDENTITY_2)

            self.overlapDiag = _kron(overlap[0], const.IDENTITY_2)
            self.overlapUpper = _kron(overlap[1], const.IDENTITY_2)
            self.overlapLower = _kron(lower(overlap[1]), const.IDENTITY_2)
            self.hamDiag = hamiltonian(overlap[0], kinetic[0], coulomb[0])
            self.hamUpper = hamiltonian(overlap[1], kinetic[1], coulomb[1])
            self.hamLower = hamiltonian(lower(overlap[1]), lower(kinetic[1]), lower(coulomb[1]))
        else:
            self.overlapDiag = overlap[0]
            self.overlapUpper = overlap[1]
            self.overlapLower = lower(overlap[1])
            self.hamDiag = kinetic[0] + coulomb[0]
            self.hamUpper = kinetic[1] + coulomb[1]
            self.hamLower = lower(self.hamUpper)

        for table in (self.overlapDiag, self.overlapUpper, self.overlapLower,
                      self.hamDiag, self.hamUpper, self.hamLower):
            table.setflags(write=False)

    @property
    def blockDim (self) -> int:
        return self.lr.blockDim

    @property
    def restEnergy (self) -> float:
        return self.lr.restEnergy(self.consts)

    def _check (self, k: int) -> None:
        if not 0 <= k < self.nBlocks:
            raise BlockGroupingException(k + 1, self.nBlocks)

    @staticmethod
    def _scale (eps: Energy) -> np.ndarray:
        return np.asarray(eps)[..., None, None]

    def diag (self, k: int, eps: Energy) -> np.ndarray:
        """ Block J_{k,k}; eps may be an array of energies. """
        self._check(k)
        return self._scale(eps) * self.overlapDiag[k] - self.hamDiag[k]

    def upper (self, k: int, eps: Energy) -> np.ndarray:
        """ Block J_{k,k+1}. """
        self._check(k)
        return self._scale(eps) * self.overlapUpper[k] - self.hamUpper[k]

    def lower (self, k: int, eps: Energy) -> np.ndarray:
        """ Block J_{k+1,k}. """
        self._check(k)
        return self._scale(eps) * self.overlapLower[k] - self.hamLower[k]

    def truncated (self, eps: complex, nBlocks: int) -> BlockTridiag:
        """
        Returns the leading nBlocks x nBlocks part of J(eps).

        :param eps: energy measured from the rest energy
        :param nBlocks: number of diagonal blocks
        """
        if not 1 <= nBlocks <= self.nBlocks:
            raise BlockGroupingException(nBlocks, self.nBlocks)
        eps = complex(eps)
        diag = eps * self.overlapDiag[:nBlocks] - self.hamDiag[:nBlocks]
        sup = eps * self.overlapUpper[:nBlocks - 1] - self.hamUpper[:nBlocks - 1]
        sub = eps * self.overlapLower[:nBlocks - 1] - self.hamLower[:nBlocks - 1]
        return BlockTridiag(diag, sup, sub, components=self.lr.components)

    def denseParts (self, nBlocks: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Returns the dense overlap and Hamiltonian matrices of the leading nBlocks
        blocks, so that J(eps) = eps * overlap - hamiltonian.

        :param nBlocks: number of diagonal blocks
        """
        overlap = BlockTridiag(self.overlapDiag[:nBlocks], self.overlapUpper[:nBlocks - 1],
                               self.overlapLower[:nBlocks - 1], self.lr.components).toDense()
        hamiltonian = BlockTridiag(self.hamDiag[:nBlocks], self.hamUpper[:nBlocks - 1],
                                   self.hamLower[:nBlocks - 1], self.lr.components).toDense()
        return overlap, hamiltonian

    def metric (self, nBlocks: int) -> np.ndarray:
        """
        Returns the matrix of the norm <psi|tau_3|psi> on the leading nBlocks blocks
        (the plain overlap on the Schroedinger path).

        :param nBlocks: number of diagonal blocks
        """
        overlap = BlockTridiag(self.overlapDiag[:nBlocks], self.overlapUpper[:nBlocks - 1],
                               self.overlapLower[:nBlocks - 1], self.lr.components)
        return overlap.tauMetric() @ overlap.toDense()

@functools.lru_cache(maxsize=16)
def longRangeOperator (spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants, nBlocks: int) -> LongRangeOperator:
    """ Cached LongRangeOperator; the tables are read-only and shared. """
    return LongRangeOperator(spec, lr, consts, nBlocks)

def assembleJ (spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants, energy: complex, nBlocks: int) -> BlockTridiag:
    """
    Returns the Feshbach-Villars J(E) = E - H^(l) on nBlocks blocks.

    :param spec: basis specification
    :param lr: long-range potential (the relativistic flag is forced on)
    :param consts: physical constants
    :param energy: total energy E
    :param nBlocks: number of diagonal blocks
    """
    lr = dataclasses.replace(lr, relativistic=True)
    operator = longRangeOperator(spec, lr, consts, nBlocks)
    return operator.truncated(complex(energy) - consts.restEnergy, nBlocks)

def assembleJSchrodinger (spec: CsBasisSpec, lr: LongRangeSpec, consts: PhysicalConstants, energy: complex, nBlocks: int) -> BlockTridiag:
    """
    Returns the Schroedinger J(E) = E - H^(l) on nBlocks blocks (1x1 or 3x3 blocks).

    :param spec: basis specification
    :param lr: long-range potential (the relativistic flag is forced off)
    :param consts: physical constants
    :param energy: Schroedinger energy
    :param nBlocks: number of diagonal blocks
    """
    lr = dataclasses.replace(lr, relativistic=False)
    operator = longRangeOperator(spec, lr, consts, nBlocks)
    return operator.truncated(complex(energy), nBlocks)

def tauStructure () -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """ Returns (tau_1, i tau_2, tau_3) as real matrices. """
    return const.TAU_1, const.I_TAU_2, const.TAU_3
