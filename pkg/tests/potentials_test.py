#!/usr/bin/env python3

""" Tests for the potentials package """

# stdlib modules
import unittest

# third party modules
import numpy as np

# module to be tested
from basis.sturmian import CsBasisSpec
from hamiltonian import const
from hamiltonian.physics import PhysicalConstants
from potentials import lowrank
from potentials.models import PotentialModel, ShortRangeTerm, TermForm, parseTerms, renderTerms

# exception modules
from potentials.exceptions import *

class ModelsTest(unittest.TestCase):
    """ A class to test the potential models and the term grammar. """

    def test_parseTerms (self) -> None:
        """ Tests parsing of a sum of terms. """
        terms = parseTerms('-240*yukawa(1) + 320*yukawa(4) - gaussian(0.5)')
        self.assertEqual(terms, (
            ShortRangeTerm(-240.0, TermForm.YUKAWA, 1.0),
            ShortRangeTerm(320.0, TermForm.YUKAWA, 4.0),
            ShortRangeTerm(-1.0, TermForm.GAUSSIAN, 0.5),
        ))
        self.assertEqual(parseTerms('  '), ())

    def test_renderTerms (self) -> None:
        """ Tests that rendered terms parse back to the same terms. """
        text = '-240.0*yukawa(1.0) + 320.0*yukawa(4.0) + 2.5e-3*exponential(0.25)'
        terms = parseTerms(text)
        self.assertEqual(parseTerms(renderTerms(terms)), terms)
        self.assertEqual(renderTerms(terms[:2]), '-240.0*yukawa(1.0) + 320.0*yukawa(4.0)')

    def test_invalidTerms (self) -> None:
        """ Tests that malformed terms are rejected. """
        for text in ('3*coulomb(1)', '2*yukawa(1) 3*yukawa(2)', 'yukawa(0)', '2*yukawa'):
            with self.assertRaises(InvalidPotentialTermException, msg=text):
                parseTerms(text)

    def test_termValues (self) -> None:
        """ Tests the radial shapes. """
        r = np.array([0.5, 2.0])
        self.assertTrue(np.allclose(ShortRangeTerm(2.0, 'yukawa', 3.0)(r), 2.0 * np.exp(-3.0 * r) / r))
        self.assertTrue(np.allclose(ShortRangeTerm(2.0, 'exponential', 3.0)(r), 2.0 * np.exp(-3.0 * r)))
        self.assertTrue(np.allclose(ShortRangeTerm(2.0, 'gaussian', 3.0)(r), 2.0 * np.exp(-3.0 * r * r)))

    def test_linearScalar (self) -> None:
        """ Tests that S = s1 r enters U as s1 r + (s1 r)^2 / 2mc^2 on the relativistic path only. """
        consts = PhysicalConstants()
        model = PotentialModel(z=-1.0, alpha1=0.5, s1=2.0)
        relativistic = model.longRange(consts, relativistic=True)
        schrodinger = model.longRange(consts, relativistic=False)
        self.assertEqual(relativistic.alpha1, 2.5)
        self.assertAlmostEqual(relativistic.alpha2, 4.0 / (2.0 * consts.restEnergy), places=15)
        self.assertEqual(schrodinger.alpha1, 2.5)
        self.assertEqual(schrodinger.alpha2, 0.0)

class LowRankTest(unittest.TestCase):
    """ A class to test the short-range matrices and the low-rank scheme. """

    def setUp (self) -> None:
        """ Sets up the basis of the Coulomb plus Yukawa example. """
        self.spec = CsBasisSpec(l=0, b=8.0, n_short=6, n_big=24, n_cf_start=100)
        self.model = PotentialModel(z=92.0, v4_short='-240*yukawa(1) + 320*yukawa(4)')

    def test_yukawaElement (self) -> None:
        """ Tests <0|v|0> = 4b^2 sum a / (2b + mu)^2 for Yukawa terms. """
        raw = lowrank.shortRangeMatrixRaw(self.model.v4_short, self.spec, 4)
        expected = 256.0 * (-240.0 / 289.0 + 320.0 / 400.0)
        self.assertAlmostEqual(raw[0, 0] / expected, 1.0, places=9)

    def test_inverseRadius (self) -> None:
        """ Tests that 1/r gives the identity, which the low-rank scheme keeps. """
        raw = lowrank.shortRangeMatrixRaw((ShortRangeTerm(1.0, 'yukawa', 1e-300),), self.spec, 12)
        self.assertTrue(np.allclose(raw, np.eye(12), rtol=0, atol=1e-12))
        self.assertTrue(np.allclose(lowrank.lowRankMatrix(raw, 5), np.eye(5), rtol=0, atol=1e-12))

    def test_zeroPotential (self) -> None:
        """ Tests that no terms give a zero matrix, which the low-rank scheme rejects. """
        raw = lowrank.shortRangeMatrixRaw((), self.spec, 8)
        self.assertFalse(np.any(raw))
        with self.assertRaises(DegeneratePotentialException):
            lowrank.lowRankMatrix(raw, 4)

    def test_invalidRank (self) -> None:
        """ Tests that a rank outside 1..n_big is rejected. """
        raw = np.eye(4)
        for rank in (0, 5):
            with self.assertRaises(InvalidRankException) as context:
                lowrank.lowRankMatrix(raw, rank)
            self.assertEqual((context.exception.rank, context.exception.size), (rank, 4))

    def test_fullRank (self) -> None:
        """ Tests that n_big = n_short returns the raw matrix. """
        raw = lowrank.shortRangeMatrixRaw(self.model.v4_short, self.spec, 6)
        self.assertTrue(np.array_equal(lowrank.lowRankMatrix(raw, 6), raw))

    def test_diagonal (self) -> None:
        """ Tests that a diagonal matrix is truncated unchanged. """
        raw = np.diag(np.arange(1.0, 11.0))
        self.assertTrue(np.allclose(lowrank.lowRankMatrix(raw, 4), np.diag(np.arange(1.0, 5.0)), rtol=1e-14, atol=0))

    def test_schurComplement (self) -> None:
        """ Tests W = ((A^-1) truncated)^-1 against the explicit inverses. """
        rng = np.random.default_rng(7)
        a = rng.normal(size=(9, 9))
        raw = a @ a.T + 9.0 * np.eye(9)
        expected = np.linalg.inv(np.linalg.inv(raw)[:4, :4])
        self.assertTrue(np.allclose(lowrank.lowRankMatrix(raw, 4), expected, rtol=1e-10, atol=0))

    def test_conditioningGuard (self) -> None:
        """ Tests that an ill-conditioned matrix falls back to the plain truncation. """
        raw = np.diag([1.0, 2.0, 1e-3, 1.0]) + 0.01 * (np.ones((4, 4)) - np.eye(4))
        with self.assertLogs(level='WARNING'):
            result = lowrank.lowRankMatrix(raw, 2, condLimit=10.0)
        self.assertTrue(np.array_equal(result, raw[:2, :2]))

    def test_defaultConditionLimit (self) -> None:
        """ Tests the default guard at condition 1e12 on both sides of the limit. """
        self.assertEqual(lowrank.DEFAULT_COND_LIMIT, 1e12)

        raw = np.diag([1.0, 2.0, 1e-13])
        with self.assertLogs(level='WARNING'):
            result = lowrank.lowRankMatrix(raw, 2)
        self.assertTrue(np.array_equal(result, raw[:2, :2]))

        # condition about 2.2e11
        raw = np.array([[1.0, 0.0, 1e-6], [0.0, 2.0, 0.0], [1e-6, 0.0, 1e-11]])
        result = lowrank.lowRankMatrix(raw, 2)
        self.assertTrue(np.allclose(result, np.diag([0.9, 2.0]), rtol=1e-6, atol=0))

    def test_channelPlacement (self) -> None:
        """ Tests the structure of each channel on the Feshbach-Villars path. """
        raw = lowrank.shortRangeMatrixRaw(self.model.v4_short, self.spec, self.spec.n_big)
        w = lowrank.lowRankMatrix(raw, self.spec.n_short)

        vector = lowrank.shortRangeMatrix(self.model, self.spec, relativistic=True)
        self.assertTrue(np.allclose(vector.dense_block, np.kron(w, const.IDENTITY_2), rtol=1e-12, atol=1e-12))

        scalar = lowrank.shortRangeMatrix(PotentialModel(v0_short=self.model.v4_short), self.spec, relativistic=True)
        self.assertTrue(np.allclose(scalar.dense_block, np.kron(w, const.KINETIC_TAU), rtol=1e-12, atol=1e-12))

        for matrix in (vector, scalar):
            self.assertEqual(matrix.components, 2)
            self.assertLess(matrix.pseudoHermiticityDefect(), 1e-12)

    def test_degenerateChannel (self) -> None:
        """ Tests that a channel with zero amplitude is left out. """
        model = PotentialModel(v4_short='0*yukawa(1)')
        with self.assertLogs(level='WARNING'):
            matrix = lowrank.shortRangeMatrix(model, self.spec, relativistic=False)
        self.assertTrue(matrix.isZero)

    def test_readOnly (self) -> None:
        """ Tests that the cached matrix cannot be modified. """
        matrix = lowrank.shortRangeMatrix(self.model, self.spec, relativistic=False)
        with self.assertRaises(ValueError):
            matrix.dense_block[0, 0] = 1.0

if __name__ == '__main__':
    unittest.main()
