#!/usr/bin/env python3

""" Reproduction runs on published spectra; each one solves a full problem and takes seconds """

# stdlib modules
import unittest

# third party modules
import numpy as np

# module to be tested
from basis.sturmian import CsBasisSpec
from hamiltonian.physics import PhysicalConstants
from potentials.models import PotentialModel
from green.fraction import SeedPolicy
from solver import const
from solver.spectrum import SpectrumSolver
from solver.states import SearchWindow, StateResult, wavefunctionOnGrid

# typing
from typing import List

SHORT_RANGE = '-240*yukawa(1) + 320*yukawa(4)'

CORNELL_SCHRODINGER = (0.57792135, 2.45016289, 3.75690569, 4.85567124, 5.83602989, 6.73662100)
CORNELL_FV0 = (0.57774937, 2.44983403, 3.75635589, 4.85486537, 5.83494151, 6.73522824)
OSCILLATOR_SCHRODINGER = (0.17966848, 2.50000000, 4.63195241, 6.71259573, 8.76951960, 10.8129243)
SCHRODINGER_BOUND = -5.9293411

def barrierSpec (b: float = 8.0, nShort: int = 32, depth: int = 5000) -> CsBasisSpec:
    return CsBasisSpec(l=0, b=b, n_short=nShort, n_big=4 * nShort, n_cf_start=depth)

class BarrierTest(unittest.TestCase):
    """ A class to test the bound state and resonance of a repulsive Coulomb plus Yukawa well. """

    def setUp (self) -> None:
        """ Sets up V = 92/r - 240 exp(-r)/r + 320 exp(-4r)/r. """
        self.consts = PhysicalConstants()
        self.model = PotentialModel(z=92.0, v4_short=SHORT_RANGE)
        self.boundWindow = SearchWindow(re_min=-6.2, re_max=-5.7, max_roots=1)
        self.resonanceWindow = SearchWindow(re_min=15.0, re_max=16.0, im_min=-0.01, im_max=0.0,
                                            initial_guesses=(15.6 - 1e-4j,))

    def boundState (self, relativistic: bool, spec: CsBasisSpec = None) -> StateResult:
        solver = SpectrumSolver(spec or barrierSpec(), self.model, self.consts, relativistic=relativistic, gridPoints=20)
        states = solver.findRoots(self.boundWindow)
        self.assertEqual(len(states), 1)
        return states[0]

    def resonance (self, relativistic: bool) -> StateResult:
        solver = SpectrumSolver(barrierSpec(depth=20000), self.model, self.consts, relativistic=relativistic)
        states = solver.findRoots(self.resonanceWindow, mode='resonance')
        self.assertEqual(len(states), 1)
        self.assertEqual(states[0].kind, const.KIND_RESONANCE)
        return states[0]

    def test_boundFv0 (self) -> None:
        """ Tests the Feshbach-Villars bound state -5.9335096 and its particle character. """
        state = self.boundState(True)
        self.assertLess(abs(state.e_bind.real - -5.9335096), 5e-6)
        self.assertEqual(state.particle_sign, 1)
        self.assertTrue(state.converged)

        r = np.linspace(0.05, 4.0, 80)
        phi, chi = wavefunctionOnGrid(state, barrierSpec(), r)
        self.assertLess(np.linalg.norm(chi), 1e-2 * np.linalg.norm(phi))

    def test_boundSchrodinger (self) -> None:
        """ Tests the Schroedinger bound state -5.9293411, which a finite-difference solution of the radial equation confirms. """
        state = self.boundState(False)
        self.assertLess(abs(state.e_bind.real - SCHRODINGER_BOUND), 1e-6)

    def test_resonanceFv0 (self) -> None:
        """ Tests the Feshbach-Villars resonance 15.5994090 - 0.0000004i. """
        state = self.resonance(True)
        self.assertLess(abs(state.e_bind.real - 15.5994090), 5e-6)
        self.assertGreaterEqual(state.e_bind.imag, -1e-6)
        self.assertLess(state.e_bind.imag, 0.0)

    def test_resonanceSchrodinger (self) -> None:
        """ Tests the Schroedinger resonance 15.6091791 - 0.0000015i. """
        state = self.resonance(False)
        self.assertLess(abs(state.e_bind.real - 15.6091791), 5e-6)
        self.assertLess(abs(state.e_bind.imag - -1.5e-6), 5e-7)

    def test_continuationNecessity (self) -> None:
        """ Tests that at the resonance the zero seed moves the corner far more than the tail seed. """
        energy = 15.5994090 - 4e-7j
        tail = SpectrumSolver(barrierSpec(depth=20000), self.model, self.consts, seedPolicy=SeedPolicy.COULOMB_TAIL)
        zero = SpectrumSolver(barrierSpec(depth=20000), self.model, self.consts, seedPolicy=SeedPolicy.ZERO)
        tailResult = tail.inverseFromRest(energy)
        zeroResult = zero.inverseFromRest(energy)
        self.assertGreater(zeroResult.change, 10.0 * tailResult.change)

    def test_scaleIndependence (self) -> None:
        """ Tests that the bound state does not depend on the basis scale b. """
        energies = [self.boundState(True, barrierSpec(b=b)).e_bind.real for b in (6.0, 8.0, 10.0)]
        for energy in energies[1:]:
            self.assertLess(abs(energy - energies[0]), 1e-6)

    def test_rankStability (self) -> None:
        """ Tests that the bound state is stable between ranks 32 and 48 of the short-range matrix. """
        small = self.boundState(True, barrierSpec(nShort=32)).e_bind.real
        large = self.boundState(True, barrierSpec(nShort=48)).e_bind.real
        self.assertLess(abs(small - large), 1e-7)

    def test_barrierRanks (self) -> None:
        """
        Tests rank 16 against the converged Schroedinger level. The barrier changes sign
        near r = 0.1, so its inverse is unbounded there and the low-rank matrix gains
        nothing over the plain truncation at low rank.
        """
        lowRank = self.boundState(False, barrierSpec(nShort=16)).e_bind.real
        solver = SpectrumSolver(barrierSpec(nShort=16), self.model, self.consts, relativistic=False, gridPoints=20,
                                lowRank=False)
        raw, = solver.findRoots(self.boundWindow)
        self.assertLess(abs(raw.e_bind.real - SCHRODINGER_BOUND), 1e-4)
        self.assertLess(abs(lowRank - SCHRODINGER_BOUND), 1e-3)

class LowRankAccuracyTest(unittest.TestCase):
    """ A class to compare the low-rank matrix with the plain truncation on a potential of one sign. """

    def level (self, nShort: int, lowRank: bool) -> float:
        spec = CsBasisSpec(l=0, b=2.0, n_short=nShort, n_big=4 * nShort, n_cf_start=1000)
        solver = SpectrumSolver(spec, PotentialModel(v4_short='-8*exponential(1)'), PhysicalConstants(),
                                relativistic=False, lowRank=lowRank, gridPoints=50)
        state, = solver.findRoots(SearchWindow(re_min=-3.0, re_max=-1.5, max_roots=1))
        return state.e_bind.real

    def test_threeWay (self) -> None:
        """ Tests that at rank 8 the low-rank level is closer to the rank-32 level than the truncated one. """
        reference = self.level(32, True)
        self.assertLess(abs(reference - self.level(32, False)), 1e-7)
        self.assertLess(abs(self.level(8, True) - reference), abs(self.level(8, False) - reference))

class ConfinementTest(unittest.TestCase):
    """ A class to test the l = 0 spectra of the Cornell potential and of an oscillator with a Coulomb term. """

    def setUp (self) -> None:
        """ Sets up the default constants and a basis for confinement. """
        self.consts = PhysicalConstants()
        self.spec = CsBasisSpec(l=0, b=1.0, n_short=32, n_cf_start=2000)

    def levels (self, model: PotentialModel, relativistic: bool, reMax: float) -> List[float]:
        solver = SpectrumSolver(self.spec, model, self.consts, relativistic=relativistic, gridPoints=400)
        states = solver.findRoots(SearchWindow(re_min=0.0, re_max=reMax, max_roots=6))
        self.assertEqual(len(states), 6)
        return [s.e_bind.real for s in states]

    def test_cornellSchrodinger (self) -> None:
        """ Tests the six lowest Schroedinger levels of -1/r + r. """
        for computed, expected in zip(self.levels(PotentialModel(z=-1.0, alpha1=1.0), False, 7.0), CORNELL_SCHRODINGER):
            self.assertLess(abs(computed - expected), 1e-6)

    def test_cornellFv0 (self) -> None:
        """ Tests the six lowest Feshbach-Villars levels of -1/r + r. """
        for computed, expected in zip(self.levels(PotentialModel(z=-1.0, alpha1=1.0), True, 7.0), CORNELL_FV0):
            self.assertLess(abs(computed - expected), 1e-6)

    def test_oscillator (self) -> None:
        """ Tests the six lowest levels of -1/r + r^2/2 and the size of the relativistic shift. """
        model = PotentialModel(z=-1.0, alpha2=0.5)
        schrodinger = self.levels(model, False, 11.5)
        for computed, expected in zip(schrodinger, OSCILLATOR_SCHRODINGER):
            self.assertLess(abs(computed - expected), 1e-6)

        fv0 = self.levels(model, True, 11.5)
        for rel, sch in zip(fv0, schrodinger):
            self.assertLess(rel, sch)
            self.assertLess(sch - rel, 1e-2)

        # the shift is a 1/c^2 correction
        largeC = PhysicalConstants(c=1370.36)
        solvers = [SpectrumSolver(self.spec, model, largeC, relativistic=relativistic, rootTolerance=1e-13)
                   for relativistic in (True, False)]
        fv0LargeC, schLargeC = [s.findRoots(SearchWindow(re_min=0.0, re_max=0.5, max_roots=1))[0].e_bind.real for s in solvers]
        self.assertAlmostEqual((schrodinger[0] - fv0[0]) / (schLargeC - fv0LargeC), 100.0, delta=20.0)

    def test_nonRelativisticLimit (self) -> None:
        """ Tests that the relativistic shift of the Cornell ground state scales as 1/c^2. """
        model = PotentialModel(z=-1.0, alpha1=1.0)
        shifts = []
        for c in (137.036, 1370.36):
            consts = PhysicalConstants(c=c)
            solvers = [SpectrumSolver(self.spec, model, consts, relativistic=relativistic, rootTolerance=1e-13)
                       for relativistic in (True, False)]
            fv0, sch = [s.findRoots(SearchWindow(re_min=0.3, re_max=0.9, max_roots=1))[0].e_bind.real for s in solvers]
            shifts.append(sch - fv0)

        self.assertGreater(shifts[1], 0.0)
        self.assertAlmostEqual(shifts[0] / shifts[1], 100.0, delta=20.0)

if __name__ == '__main__':
    unittest.main()
