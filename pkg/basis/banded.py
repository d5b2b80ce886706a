#!/usr/bin/env python3

""" A module for symmetric banded matrices stored by diagonal offset """

# third party modules
import numpy as np

# exceptions
from basis.exceptions import MatrixSizeException

# typing
from typing import Tuple

class BandedSymmetric:
    """
    Real symmetric matrix with all entries beyond `bandwidth` equal to zero.

    bands[k, n] holds entry (n, n + k); positions with n + k >= size are zero.

    :param bands: array of shape (bandwidth + 1, size)
    """

    def __init__ (self, bands: np.ndarray) -> None:
        bands = np.array(bands, dtype=float)
        if bands.ndim != 2:
            raise MatrixSizeException(bands.shape, f'Expected a 2d band array, got shape {bands.shape}.')
        for k in range(1, bands.shape[0]):
            bands[k, bands.shape[1] - k:] = 0.0
        bands.setflags(write=False)
        self.bands = bands

    @property
    def size (self) -> int:
        return self.bands.shape[1]

    @property
    def bandwidth (self) -> int:
        return self.bands.shape[0] - 1

    def entry (self, n: int, m: int) -> float:
        """
        Returns entry (n, m).

        :param n: row index
        :param m: column index
        """
        if not (0 <= n < self.size and 0 <= m < self.size):
            raise IndexError(f'Entry ({n}, {m}) outside of a {self.size}x{self.size} matrix.')
        k = abs(n - m)
        if k > self.bandwidth:
            return 0.0
        return float(self.bands[k, min(n, m)])

    def toDense (self) -> np.ndarray:
        """ Returns the full size x size matrix. """
        dense = np.diag(self.bands[0])
        for k in range(1, self.bandwidth + 1):
            off = self.bands[k, :self.size - k]
            dense += np.diag(off, k) + np.diag(off, -k)
        return dense

    def entries (self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        """
        Vectorized entry lookup for index arrays of equal shape.

        :param rows: row indices
        :param cols: column indices
        """
        rows = np.asarray(rows)
        cols = np.asarray(cols)
        k = np.abs(rows - cols)
        inside = (k <= self.bandwidth) & (np.maximum(rows, cols) < self.size)
        values = np.zeros(rows.shape)
        values[inside] = self.bands[k[inside], np.minimum(rows, cols)[inside]]
        return values

    def blocks (self, groupSize: int, nBlocks: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Regroups consecutive indices into blocks of `groupSize` and returns the
        diagonal blocks (i, i) and the upper blocks (i, i + 1), each of shape
        (nBlocks, groupSize, groupSize). The lower block (i + 1, i) is the
        transpose of the upper one.

        :param groupSize: number of consecutive indices forming one block
        :param nBlocks: number of diagonal blocks to return
        """
        if groupSize * (nBlocks + 1) > self.size:
            raise MatrixSizeException(self.size, f'{nBlocks} blocks of size {groupSize} need {groupSize * (nBlocks + 1)} rows, matrix has {self.size}.')
        if self.bandwidth > groupSize:
            raise MatrixSizeException(groupSize, f'Bandwidth {self.bandwidth} cannot be block-tridiagonal with groups of {groupSize}.')

        start = groupSize * np.arange(nBlocks)[:, None, None]
        a = np.arange(groupSize)[None, :, None]
        c = np.arange(groupSize)[None, None, :]
        rows = np.broadcast_to(start + a, (nBlocks, groupSize, groupSize))
        diagCols = np.broadcast_to(start + c, (nBlocks, groupSize, groupSize))
        upperCols = diagCols + groupSize

        return self.entries(rows, diagCols), self.entries(rows, upperCols)
