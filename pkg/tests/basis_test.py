#!/usr/bin/env python3

""" Tests for the basis package """

# stdlib modules
import unittest

# third party modules
import numpy as np

# module to be tested
from basis import sturmian, quadrature
from basis.sturmian import CsBasisSpec
from basis.banded import BandedSymmetric

# exception modules
from basis.exceptions import *

class SturmianTest(unittest.TestCase):
    """ A class to test the analytic Coulomb-Sturmian matrix elements. """

    def setUp (self) -> None:
        """ Sets up basis specifications with two angular momenta and scales. """
        self.specs = [
            CsBasisSpec(l=0, b=1.0, n_short=4, n_cf_start=100),
            CsBasisSpec(l=2, b=0.7, n_short=4, n_cf_start=100),
        ]
        self.size = 12

    def test_rMatrixCorner (self) -> None:
        """ Tests <0|r|0> = 3/2 for l = 0, b = 1. """
        self.assertAlmostEqual(sturmian.rMatrix(self.specs[0], 3).entry(0, 0), 1.5, places=15)

    def test_functionValue (self) -> None:
        """ Tests <r|0> = 2br exp(-br) for l = 0. """
        spec = CsBasisSpec(l=0, b=2.0, n_short=4, n_cf_start=100)
        for r in (0.1, 1.0, 3.5):
            self.assertAlmostEqual(sturmian.csFunction(spec, 0, r), 4.0 * r * np.exp(-2.0 * r), places=13)

    def test_multiplicativeAgainstQuadrature (self) -> None:
        """ Tests overlap, 1/r, r and r^2 against Gauss-Laguerre quadrature. """
        for spec in self.specs:
            cases = [
                (sturmian.overlapMatrix, lambda r: np.ones_like(r)),
                (sturmian.inverseRMatrix, lambda r: 1.0 / r),
                (sturmian.rMatrix, lambda r: r),
                (sturmian.r2Matrix, lambda r: r * r),
            ]
            for build, f in cases:
                exact = build(spec, self.size).toDense()
                numeric = quadrature.quadratureMatrix(spec, self.size, f)
                scale = max(1.0, float(np.max(np.abs(exact))))
                self.assertLess(float(np.max(np.abs(exact - numeric))) / scale, 1e-10, build.__name__)

    def test_kineticFromSturmianEquation (self) -> None:
        """ Tests <n|p^2|m> = 2b(n+l+1) delta_nm - b^2 <n|m>, which follows from the Sturmian equation. """
        for spec in self.specs:
            n = np.arange(self.size)
            expected = np.diag(2.0 * spec.b * (n + spec.l + 1)) - spec.b**2 * sturmian.overlapMatrix(spec, self.size).toDense()
            actual = sturmian.p2Matrix(spec, self.size).toDense()
            self.assertTrue(np.allclose(actual, expected, rtol=0, atol=1e-12))

    def test_quadratureGrid (self) -> None:
        """ Tests all five matrices for n <= 20 over l in {0, 1, 2} and b in {0.5, 1, 8}. """
        size = 21
        for l in (0, 1, 2):
            for b in (0.5, 1.0, 8.0):
                spec = CsBasisSpec(l=l, b=b, n_short=4, n_cf_start=100)
                overlap = quadrature.quadratureMatrix(spec, size, lambda r: np.ones_like(r))
                inverse = quadrature.quadratureMatrix(spec, size, lambda r: 1.0 / r)
                # p^2 <r|n> = (2b(n+l+1)/r - b^2) <r|n>
                n = np.arange(size)
                kinetic = inverse * (2.0 * b * (n + l + 1))[None, :] - b**2 * overlap
                numeric = {
                    sturmian.overlapMatrix: overlap,
                    sturmian.p2Matrix: kinetic,
                    sturmian.inverseRMatrix: inverse,
                    sturmian.rMatrix: quadrature.quadratureMatrix(spec, size, lambda r: r),
                    sturmian.r2Matrix: quadrature.quadratureMatrix(spec, size, lambda r: r * r),
                }
                for build, values in numeric.items():
                    exact = build(spec, size).toDense()
                    scale = max(1.0, float(np.max(np.abs(exact))))
                    # entries outside the band are compared at the scale of the matrix
                    allowed = np.where(exact != 0, 1e-10 * (1.0 + np.abs(exact)), 1e-10 * scale)
                    self.assertTrue(np.all(np.abs(exact - values) <= allowed), f'{build.__name__} l={l} b={b}')

    def test_positiveDefinite (self) -> None:
        """ Tests that the overlap, r and r^2 matrices are positive definite. """
        for spec in self.specs:
            for build in (sturmian.overlapMatrix, sturmian.rMatrix, sturmian.r2Matrix):
                eigenvalues = np.linalg.eigvalsh(build(spec, self.size).toDense())
                self.assertGreater(float(np.min(eigenvalues)), 0.0, build.__name__)

    def test_scaleCovariance (self) -> None:
        """ Tests that each matrix scales with a fixed power of b. """
        powers = {
            sturmian.overlapMatrix: -1,
            sturmian.p2Matrix: 1,
            sturmian.inverseRMatrix: 0,
            sturmian.rMatrix: -2,
            sturmian.r2Matrix: -3,
        }
        for l in (0, 2):
            unit = CsBasisSpec(l=l, b=1.0, n_short=4, n_cf_start=100)
            for b in (0.5, 3.0):
                scaled = CsBasisSpec(l=l, b=b, n_short=4, n_cf_start=100)
                for build, power in powers.items():
                    expected = b**power * build(unit, self.size).toDense()
                    actual = build(scaled, self.size).toDense()
                    self.assertTrue(np.allclose(actual, expected, rtol=1e-14, atol=0), f'{build.__name__} l={l} b={b}')

    def test_invalidSize (self) -> None:
        """ Tests that an empty matrix is rejected. """
        for build in (sturmian.overlapMatrix, sturmian.p2Matrix, sturmian.inverseRMatrix, sturmian.rMatrix):
            with self.assertRaises(MatrixSizeException) as context:
                build(self.specs[0], 0)
            self.assertEqual(context.exception.size, 0)

    def test_bandwidths (self) -> None:
        """ Tests the bandwidth of each matrix. """
        spec = self.specs[1]
        expected = {
            sturmian.overlapMatrix: 1,
            sturmian.p2Matrix: 1,
            sturmian.inverseRMatrix: 0,
            sturmian.rMatrix: 2,
            sturmian.r2Matrix: 3,
        }
        for build, bandwidth in expected.items():
            dense = build(spec, self.size).toDense()
            rows, cols = np.nonzero(dense)
            self.assertEqual(int(np.max(np.abs(rows - cols))), bandwidth, build.__name__)

    def test_invalidSpec (self) -> None:
        """ Tests that invalid specifications are rejected with the offending field. """
        invalid = [
            ({'b': -1.0}, 'b'),
            ({'l': -1}, 'l'),
            ({'n_short': 8, 'n_big': 4}, 'n_big'),
            ({'n_short': 8, 'n_cf_start': 32}, 'n_cf_start'),
        ]
        for kwargs, field in invalid:
            with self.assertRaises(InvalidBasisSpecException) as context:
                CsBasisSpec(**kwargs)
            self.assertEqual(context.exception.field, field)

    def test_domain (self) -> None:
        """ Tests that non-positive radii are rejected. """
        with self.assertRaises(BasisDomainException):
            sturmian.csFunction(self.specs[0], 0, 0.0)

class QuadratureTest(unittest.TestCase):
    """ A class to test the Gauss-Laguerre rule. """

    def test_weightSum (self) -> None:
        """ Tests that the weights integrate x^alpha e^-x to Gamma(alpha + 1). """
        for alpha, expected in ((1.0, 1.0), (3.0, 6.0), (5.0, 120.0)):
            _, logWeights = quadrature.gaussLaguerre(40, alpha)
            self.assertAlmostEqual(float(np.sum(np.exp(logWeights))) / expected, 1.0, places=12)

    def test_largeRule (self) -> None:
        """ Tests that a large rule stays finite. """
        x, logWeights = quadrature.gaussLaguerre(1024, 1.0)
        self.assertTrue(np.all(np.isfinite(x)))
        self.assertTrue(np.all(np.isfinite(logWeights)))
        self.assertTrue(np.all(np.diff(x) > 0))

    def test_element (self) -> None:
        """ Tests a single quadrature element against the analytic one. """
        spec = CsBasisSpec(l=1, b=1.5, n_short=4, n_cf_start=100)
        exact = sturmian.rMatrix(spec, 6).entry(3, 5)
        self.assertAlmostEqual(quadrature.quadratureElement(spec, 3, 5, lambda r: r), exact, places=10)

class BandedTest(unittest.TestCase):
    """ A class to test the banded storage. """

    def test_blocks (self) -> None:
        """ Tests regrouping a bandwidth-3 matrix into 3x3 blocks. """
        spec = CsBasisSpec(l=0, b=1.0, n_short=4, n_cf_start=100)
        matrix = sturmian.r2Matrix(spec, 12)
        dense = matrix.toDense()
        diag, upper = matrix.blocks(3, 3)
        for k in range(3):
            self.assertTrue(np.array_equal(diag[k], dense[3*k:3*k+3, 3*k:3*k+3]))
        for k in range(2):
            self.assertTrue(np.array_equal(upper[k], dense[3*k:3*k+3, 3*k+3:3*k+6]))

    def test_blocksTooNarrow (self) -> None:
        """ Tests that a bandwidth wider than the group size is rejected. """
        matrix = BandedSymmetric(np.ones((3, 10)))
        with self.assertRaises(MatrixSizeException):
            matrix.blocks(1, 4)

if __name__ == '__main__':
    unittest.main()
