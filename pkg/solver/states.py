#!/usr/bin/env python3

""" A module for search windows, solved states and their wave functions """

# stdlib modules
from dataclasses import dataclass, field

# third party modules
import numpy as np

# inner modules
from basis.sturmian import CsBasisSpec, csFunctions
from solver import const

# exceptions
from solver.exceptions import *

# typing
from typing import Optional, Tuple

@dataclass(frozen=True)
class SearchWindow:
    """
    Region of the energy plane searched for roots, in reported energies
    (measured from the rest energy on the Feshbach-Villars path).

    :param re_min: lower end of the real part
    :param re_max: upper end of the real part
    :param im_min: lower end of the imaginary part
    :param im_max: upper end of the imaginary part, at most 0
    :param initial_guesses: starting points of the resonance search
    :param max_roots: number of roots kept, lowest first
    """

    re_min: float
    re_max: float
    im_min: float = 0.0
    im_max: float = 0.0
    initial_guesses: Tuple[complex, ...] = ()
    max_roots: int = 10

    def __post_init__ (self) -> None:
        object.__setattr__(self, 'initial_guesses', tuple(complex(g) for g in self.initial_guesses))
        if not self.re_min < self.re_max:
            raise InvalidSearchWindowException('re_min', self.re_min, message=f're_min = {self.re_min} must be below re_max = {self.re_max}.')
        if self.im_max > 0:
            raise InvalidSearchWindowException('im_max', self.im_max, message=f'im_max = {self.im_max} must not be positive.')
        if self.im_min > self.im_max:
            raise InvalidSearchWindowException('im_min', self.im_min, message=f'im_min = {self.im_min} must not exceed im_max = {self.im_max}.')
        if self.max_roots < 1:
            raise InvalidSearchWindowException('max_roots', self.max_roots)

    def contains (self, energy: complex, tolerance: float = 0.0) -> bool:
        """ Whether energy lies in the window, widened by tolerance. """
        return (self.re_min - tolerance <= energy.real <= self.re_max + tolerance
                and self.im_min - tolerance <= energy.imag <= self.im_max + tolerance)

@dataclass(frozen=True, eq=False)
class StateResult:
    """
    A root of det[(G^(l))^-1 - H^(s)] with its basis-space vector.

    :param e_total: total energy
    :param e_bind: e_total minus the rest energy (equal to e_total on the Schroedinger path)
    :param kind: 'bound' or 'resonance'
    :param particle_sign: +1 particle, -1 antiparticle, None undetermined
    :param coefficients: coefficient vector, component index fastest
    :param residual: smallest singular value of the bracket at the root
    :param depth_used: deepest level of the continued fraction
    :param iterations: iterations of the root refinement
    :param relativistic: Feshbach-Villars (True) or Schroedinger (False)
    :param converged: root iteration, residual, depth stability and the continued fraction all passed
    :param degenerate: two singular values of the bracket are negligible
    :param depth_shift: root shift predicted when the fraction depth is halved
    :param scale: largest singular value of the bracket at the root
    :param cf_change: relative corner change of the continued fraction at the root under halving its depth
    """

    e_total: complex
    e_bind: complex
    kind: str
    particle_sign: Optional[int]
    coefficients: np.ndarray = field(repr=False)
    residual: float
    depth_used: int
    iterations: int
    relativistic: bool = True
    converged: bool = True
    degenerate: bool = False
    depth_shift: float = 0.0
    scale: float = 1.0
    cf_change: float = float('nan')

    @property
    def width (self) -> float:
        """ Decay width -2 Im E (zero for bound states). """
        return -2.0 * self.e_total.imag if self.kind == const.KIND_RESONANCE else 0.0

    @property
    def components (self) -> int:
        return 2 if self.relativistic else 1

def extractState (bracket: np.ndarray, metric: np.ndarray, bound: bool = True) -> Tuple[np.ndarray, Optional[int], float, float, bool]:
    """
    Returns (coefficients, particle sign, residual, scale, degenerate) from the
    right null vector of the bracket at a root.

    The vector is phased so that its largest component is real and positive. For
    bound states it is rescaled to <psi|tau_3|psi> = +-1; resonances keep unit
    length and an undetermined sign.

    :param bracket: bracket matrix at the root
    :param metric: matrix of <psi|tau_3|psi> (the overlap on the Schroedinger path)
    :param bound: whether the root is a bound state
    """

    _, singular, vh = np.linalg.svd(bracket)
    coefficients = vh[-1].conj()
    residual = float(singular[-1])
    scale = float(singular[0])
    degenerate = bool(singular.size > 1 and singular[-2] <= const.DEGENERACY_TOLERANCE * scale)

    largest = coefficients[np.argmax(np.abs(coefficients))]
    coefficients = coefficients * (abs(largest) / largest)

    sign = None
    if bound:
        norm = complex(coefficients.conj() @ metric @ coefficients)
        size = float(np.vdot(coefficients, coefficients).real)
        if abs(norm.real) > const.NORM_TOLERANCE * size:
            sign = 1 if norm.real > 0 else -1
            coefficients = coefficients / np.sqrt(abs(norm.real))

    return coefficients, sign, residual, scale, degenerate

def wavefunctionOnGrid (state: StateResult, spec: CsBasisSpec, rGrid: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns (phi(r), chi(r)) = sum_n c_n <r|n> for each component; chi is zero on
    the Schroedinger path.

    :param state: solved state
    :param spec: basis specification it was solved in
    :param rGrid: positive radii
    """

    rGrid = np.atleast_1d(np.asarray(rGrid, dtype=float))
    coefficients = np.asarray(state.coefficients, dtype=complex).reshape(-1, state.components)
    functions = csFunctions(spec, coefficients.shape[0] - 1, rGrid)

    phi = coefficients[:, 0] @ functions
    chi = coefficients[:, 1] @ functions if state.components == 2 else np.zeros(rGrid.shape, dtype=complex)
    return phi, chi
