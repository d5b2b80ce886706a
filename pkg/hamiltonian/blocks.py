#!/usr/bin/env python3

""" A module for block-tridiagonal matrices """

# third party modules
import numpy as np

# inner modules
from hamiltonian import const

# exceptions
from hamiltonian.exceptions import BlockShapeException

class BlockTridiag:
    """
    Block-tridiagonal matrix.

    :param diag: diagonal blocks, shape (nBlocks, d, d)
    :param sup: blocks (i, i+1), shape (nBlocks - 1, d, d)
    :param sub: blocks (i+1, i), shape (nBlocks - 1, d, d)
    :param components: 2 when the blocks carry the (phi, chi) structure with the component index fastest
    """

    def __init__ (self, diag: np.ndarray, sup: np.ndarray, sub: np.ndarray, components: int = 1) -> None:
        diag = np.asarray(diag)
        sup = np.asarray(sup)
        sub = np.asarray(sub)
        if diag.ndim != 3 or diag.shape[1] != diag.shape[2]:
            raise BlockShapeException(diag.shape, f'Diagonal blocks must have shape (n, d, d), got {diag.shape}.')
        expected = (diag.shape[0] - 1,) + diag.shape[1:]
        if sup.shape != expected or sub.shape != expected:
            raise BlockShapeException(sup.shape if sup.shape != expected else sub.shape, f'Off-diagonal blocks must have shape {expected}, got {sup.shape} and {sub.shape}.')
        if diag.shape[1] % components:
            raise BlockShapeException(diag.shape, f'Block size {diag.shape[1]} is not a multiple of {components} components.')

        self.diag = diag
        self.sup = sup
        self.sub = sub
        self.components = components

    @property
    def blockDim (self) -> int:
        return self.diag.shape[1]

    @property
    def nBlocks (self) -> int:
        return self.diag.shape[0]

    def toDense (self) -> np.ndarray:
        """ Returns the full matrix. """
        d = self.blockDim
        dense = np.zeros((self.nBlocks * d, self.nBlocks * d), dtype=np.result_type(self.diag, self.sup, self.sub))
        for k in range(self.nBlocks):
            dense[k*d:(k+1)*d, k*d:(k+1)*d] = self.diag[k]
        for k in range(self.nBlocks - 1):
            dense[k*d:(k+1)*d, (k+1)*d:(k+2)*d] = self.sup[k]
            dense[(k+1)*d:(k+2)*d, k*d:(k+1)*d] = self.sub[k]
        return dense

    def tauMetric (self) -> np.ndarray:
        """ tau_3 extended block-diagonally (identity for one-component blocks). """
        size = self.nBlocks * self.blockDim
        if self.components == 1:
            return np.eye(size)
        return np.kron(np.eye(size // 2), const.TAU_3)

    def pseudoHermiticityDefect (self) -> float:
        """ Returns max |tau_3 J^dagger tau_3 - J| relative to max |J|. """
        dense = self.toDense()
        tau = self.tauMetric()
        scale = float(np.max(np.abs(dense))) or 1.0
        return float(np.max(np.abs(tau @ dense.conj().T @ tau - dense))) / scale
