#!/usr/bin/env python3

"""
A module for the spectrum of H = H^(l) + H^(s).

States are the roots of the homogeneous condition

    det[(G^(l)(E))^-1 - H^(s)] = 0

with bound states on the real axis and resonances below it.
"""

# stdlib modules
import logging

# third party modules
import numpy as np
from scipy.optimize import brentq

# inner modules
from basis.sturmian import CsBasisSpec
from hamiltonian.physics import PhysicalConstants
from green.greens import LongRangeGreen, DEFAULT_CF_TOLERANCE
from green.fraction import SeedPolicy
from potentials.models import PotentialModel
from potentials.lowrank import shortRangeMatrix, DEFAULT_COND_LIMIT
from solver import const
from solver.muller import Muller
from solver.states import SearchWindow, StateResult, extractState

# exceptions
from green.exceptions import SingularBlockException
from solver.exceptions import *

# typing
from typing import List, Optional, Tuple, Union

def determinantIndicator (bracket: np.ndarray, referenceLogAbs: float = 0.0) -> complex:
    """
    Returns det(bracket) / exp(referenceLogAbs) from an LU factorization.

    :param bracket: square matrix
    :param referenceLogAbs: log |det| at the reference energy
    """
    sign, logAbs = np.linalg.slogdet(bracket)
    return complex(sign * np.exp(logAbs - referenceLogAbs))

class SpectrumSolver(LongRangeGreen):
    """
    Finds bound states and resonances of a potential model.

    :param spec: basis specification
    :param model: potential model
    :param consts: physical constants
    :param relativistic: Feshbach-Villars (True) or Schroedinger (False) path
    :param seedPolicy: continued-fraction seed (default by confinement)
    :param cfTolerance: corner-change tolerance of the continued fraction
    :param strict: raise on an unconverged continued fraction
    :param condLimit: conditioning guard of the low-rank scheme
    :param lowRank: use the low-rank short-range representation
    :param gridPoints: points of the real-axis scan
    :param rootTolerance: root refinement tolerance relative to 1 + |E|
    :param depthTolerance: root shift allowed under halving the depth, relative to 1 + |E|
    """

    def __init__ (self, spec: CsBasisSpec, model: PotentialModel, consts: PhysicalConstants,
                  relativistic: bool = True, seedPolicy: Optional[Union[SeedPolicy, str]] = None,
                  cfTolerance: float = DEFAULT_CF_TOLERANCE, strict: bool = False,
                  condLimit: float = DEFAULT_COND_LIMIT, lowRank: bool = True,
                  gridPoints: int = const.GRID_POINTS, rootTolerance: float = const.ROOT_TOLERANCE,
                  depthTolerance: float = const.DEPTH_TOLERANCE) -> None:

        self.model = model
        super().__init__(spec, model.longRange(consts, relativistic), consts, seedPolicy, cfTolerance, strict)

        self.relativistic = relativistic
        self.gridPoints = gridPoints
        self.rootTolerance = rootTolerance
        self.depthTolerance = depthTolerance

        self.shortRange = None
        if model.hasShortRange:
            matrix = shortRangeMatrix(model, spec, relativistic, self.lr.groupSize, condLimit, lowRank)
            if not matrix.isZero:
                self.shortRange = matrix.dense_block

        self.metricMatrix = self.operator.metric(self.nShort)

        # |det| at a point of the upper half plane, where there are no roots
        self.referenceEnergy = 1j * (1.0 + self.consts.kineticFactor * spec.b**2)
        self.referenceLogAbs = float(np.linalg.slogdet(self.bracket(self.referenceEnergy))[1])

    def total (self, energy: complex) -> complex:
        """ Total energy from a reported one. """
        return complex(energy) + self.restEnergy

    def bracket (self, energy: complex, depth: Optional[int] = None) -> np.ndarray:
        """
        Returns (G^(l)(E))^-1 - H^(s) at a reported energy.

        :param energy: reported energy (total energy minus the rest energy)
        :param depth: deepest level of the continued fraction
        """
        g = self.inverseFromRest(energy, depth, diagnose=False).g_inverse
        return g if self.shortRange is None else g - self.shortRange

    def bracketBatch (self, energies: np.ndarray, depth: Optional[int] = None) -> np.ndarray:
        """
        Returns the brackets at an array of reported energies, shape (nE, M, M).

        :param energies: reported energies
        :param depth: deepest level of the continued fraction
        """
        g = self.inverseBatchFromRest(energies, depth)
        return g if self.shortRange is None else g - self.shortRange[None]

    def logIndicator (self, energy: complex, depth: Optional[int] = None) -> Tuple[complex, float]:
        """
        Returns (phase, log |D|) of the normalized determinant at a reported energy; a
        singular block shifts E by a relative 1e-12 once.

        :param energy: reported energy
        :param depth: deepest level of the continued fraction
        """
        energy = complex(energy)
        try:
            sign, logAbs = np.linalg.slogdet(self.bracket(energy, depth))
        except SingularBlockException as e:
            shifted = energy + const.POLE_PERTURBATION * (1.0 + abs(energy))
            logging.warning(f'{e.message} Retrying at {shifted}.')
            sign, logAbs = np.linalg.slogdet(self.bracket(shifted, depth))
        return complex(sign), float(logAbs - self.referenceLogAbs)

    def indicator (self, energy: complex, depth: Optional[int] = None) -> complex:
        """ Normalized determinant D at a reported energy. """
        sign, logAbs = self.logIndicator(energy, depth)
        return sign * np.exp(logAbs)

    def logIndicatorBatch (self, energies: np.ndarray, depth: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
        """
        Returns (phase, log |D|) at an array of reported energies.

        :param energies: reported energies
        :param depth: deepest level of the continued fraction
        """
        energies = np.atleast_1d(np.asarray(energies, dtype=complex))
        try:
            sign, logAbs = np.linalg.slogdet(self.bracketBatch(energies, depth))
            return sign, logAbs - self.referenceLogAbs
        except SingularBlockException:
            logging.debug('Singular block in a batch, evaluating energies one by one.')

        sign = np.full(energies.shape, np.nan, dtype=complex)
        logAbs = np.full(energies.shape, np.nan)
        for i, energy in enumerate(energies):
            try:
                sign[i], logAbs[i] = self.logIndicator(energy, depth)
            except SingularBlockException as e:
                logging.warning(f'{e.message} Skipping {energy}.')
        return sign, logAbs

    def scan (self, energies: np.ndarray) -> np.ndarray:
        """
        Returns D at an array of reported energies (real or complex).

        :param energies: reported energies
        """
        energies = np.atleast_1d(np.asarray(energies, dtype=complex))
        logging.info(f'Scanning the indicator at {energies.size} energies.')
        sign, logAbs = self.logIndicatorBatch(energies)
        return sign * np.exp(logAbs)

    def boundInterval (self, window: SearchWindow) -> Tuple[float, float]:
        """
        Returns the part of the window's real range searched for bound states;
        without confinement only energies below the continuum threshold are kept.

        :param window: search window
        """
        low, high = window.re_min, window.re_max
        if not self.lr.confining:
            margin = self.rootTolerance * (1.0 + abs(low))
            high = min(high, -margin)
            if self.relativistic:
                low = max(low, -2.0 * self.consts.restEnergy + margin)
        return low, high

    def inContinuum (self, energy: float) -> bool:
        """
        Returns whether a real reported energy lies in a scattering continuum: above
        the threshold or, on the Feshbach-Villars path, below -2mc^2. Confinement
        has no continuum.

        :param energy: real part of a reported energy
        """
        if self.lr.confining:
            return False
        if energy > 0:
            return True
        return self.relativistic and energy < -2.0 * self.consts.restEnergy

    def findBound (self, window: SearchWindow) -> List[StateResult]:
        """
        Returns the bound states in the window: sign changes of Re D on a grid,
        refined by Brent's method. Sign changes at poles of D are dropped.

        :param window: search window
        """

        low, high = self.boundInterval(window)
        if not low < high:
            logging.info('Search window holds no bound-state energies.')
            return []

        grid = np.linspace(low, high, self.gridPoints)
        logging.info(f'Scanning {grid.size} energies in [{low}, {high}] for bound states.')
        sign, logAbs = self.logIndicatorBatch(grid)
        values = (sign * np.exp(logAbs)).real

        def realIndicator (e: float) -> float:
            phase, log = self.logIndicator(e)
            return float(phase.real * np.exp(log))

        states = []
        for i in range(grid.size - 1):
            if not (np.isfinite(values[i]) and np.isfinite(values[i + 1])):
                continue
            if values[i] == 0.0:
                root, iterations = float(grid[i]), 0
            elif values[i] * values[i + 1] < 0:
                try:
                    root, info = brentq(realIndicator, grid[i], grid[i + 1], xtol=self.rootTolerance,
                                        rtol=max(self.rootTolerance, 4 * np.finfo(float).eps), full_output=True)
                except SingularBlockException as e:
                    logging.warning(f'{e.message} Skipping the sign change in [{grid[i]}, {grid[i + 1]}].')
                    continue
                if self.logIndicator(root)[1] >= min(logAbs[i], logAbs[i + 1]):
                    logging.debug(f'Sign change near {root} is a pole of the indicator.')
                    continue
                iterations = info.iterations
            else:
                continue

            logging.info(f'Bound state found at {root}.')
            states.append(self.refineState(complex(root), const.KIND_BOUND, iterations))
            if len(states) >= window.max_roots:
                break

        return states

    def resonanceGuesses (self, window: SearchWindow) -> List[complex]:
        """
        Returns the window's initial guesses or, without any, the local minima of
        |D| on the real axis above the threshold.

        :param window: search window
        """

        if window.initial_guesses:
            return list(window.initial_guesses)

        low = window.re_min if self.lr.confining else max(window.re_min, 0.0)
        grid = np.linspace(low, window.re_max, self.gridPoints)
        _, logAbs = self.logIndicatorBatch(grid)
        interior = np.arange(1, grid.size - 1)
        minima = interior[(logAbs[interior] < logAbs[interior - 1]) & (logAbs[interior] < logAbs[interior + 1])]
        logging.info(f'Found {minima.size} minima of |D| on the real axis to start the resonance search.')
        return [complex(grid[i]) for i in minima]

    def findResonances (self, window: SearchWindow) -> List[StateResult]:
        """
        Returns the roots reached by Muller iterations from the resonance guesses;
        roots above the real axis or outside the window are dropped.

        :param window: search window
        """

        muller = Muller(self.indicator,
                        xtol=self.rootTolerance, rtol=self.rootTolerance)
        states = []
        for guess in self.resonanceGuesses(window):
            try:
                root = muller.solve(guess)
            except (RootIterationException, SingularBlockException, FloatingPointError) as e:
                logging.warning(f'Resonance search from {guess} failed: {e}')
                continue

            tolerance = const.BOUND_IMAG_TOLERANCE * (1.0 + abs(root.real))
            if root.imag > tolerance:
                logging.warning(f'Discarding root {root} above the real axis.')
                continue
            if self.inContinuum(root.real):
                # a narrow resonance keeps its width however small
                kind = const.KIND_RESONANCE
                root = complex(root.real, min(root.imag, 0.0))
            elif abs(root.imag) <= tolerance:
                kind = const.KIND_BOUND
                root = complex(root.real, 0.0)
            else:
                kind = const.KIND_RESONANCE
            if not window.contains(root, tolerance):
                logging.info(f'Root {root} lies outside the search window.')
                continue

            logging.info(f'{kind.capitalize()} found at {root}.')
            states.append(self.refineState(root, kind, iterations=muller.iterations[-1]))

        return states

    def findRoots (self, window: SearchWindow, mode: str = 'bound') -> List[StateResult]:
        """
        Returns the states of the window sorted by Re E, then Im E.

        :param window: search window
        :param mode: 'bound', 'resonance' or 'both'
        """

        if mode not in ('bound', 'resonance', 'both'):
            raise InvalidSearchModeException(mode)

        states = []
        if mode in ('bound', 'both'):
            states += self.findBound(window)
        if mode in ('resonance', 'both'):
            states += self.findResonances(window)

        states.sort(key=lambda s: (s.e_bind.real, s.e_bind.imag))
        unique = []
        for state in states:
            if unique and abs(state.e_bind - unique[-1].e_bind) <= const.DEDUPLICATION_TOLERANCE * (1.0 + abs(state.e_bind)):
                continue
            unique.append(state)
        return unique[:window.max_roots]

    def derivative (self, energy: complex) -> complex:
        """ Central difference dD/dE at a reported energy. """
        h = const.DERIVATIVE_STEP * (1.0 + abs(energy))
        return (self.indicator(energy + h) - self.indicator(energy - h)) / (2.0 * h)

    def depthShift (self, energy: complex) -> float:
        """
        Returns |D_half(E) / D'(E)|, the root shift predicted when the continued
        fraction depth is halved.

        :param energy: reported energy of the root
        """
        slope = self.derivative(energy)
        if slope == 0:
            return float('inf')
        return float(abs(self.indicator(energy, self.depth // 2) / slope))

    def refineState (self, energy: complex, kind: str, iterations: int = 0) -> StateResult:
        """
        Returns the state at a reported root energy with its vector and diagnostics.

        :param energy: reported energy of the root
        :param kind: 'bound' or 'resonance'
        :param iterations: iterations spent on the root
        """

        green = self.inverseFromRest(energy)
        bracket = green.g_inverse if self.shortRange is None else green.g_inverse - self.shortRange
        coefficients, sign, residual, scale, degenerate = extractState(bracket, self.metricMatrix, kind == const.KIND_BOUND)
        shift = self.depthShift(energy)

        converged = (residual <= const.RESIDUAL_TOLERANCE * scale and shift <= self.depthTolerance * (1.0 + abs(energy))
                     and green.converged)
        if not converged:
            logging.warning(f'State at {energy} not converged: residual {residual:.3e}, depth shift {shift:.3e}, '
                            f'continued fraction change {green.change:.3e}.')

        return StateResult(e_total=self.total(energy), e_bind=complex(energy), kind=kind, particle_sign=sign,
                           coefficients=coefficients, residual=residual, depth_used=self.depth,
                           iterations=int(iterations), relativistic=self.relativistic, converged=converged,
                           degenerate=degenerate, depth_shift=shift, scale=scale,
                           cf_change=green.change)
