#!/usr/bin/env python3

"""
A module for declarative potential models.

The vector potential is V = Z e^2 / r + v4_short(r) and the scalar one
U = alpha1 r + alpha2 r^2 + v0_short(r). Short-range terms are written as

    -240*yukawa(1) + 320*yukawa(4)
"""

# stdlib modules
import re
import dataclasses
from enum import Enum
from dataclasses import dataclass

# third party modules
import numpy as np

# inner modules
from hamiltonian.physics import PhysicalConstants, LongRangeSpec

# exceptions
from potentials.exceptions import *

# typing
from typing import Callable, Tuple, Union

# typedef
ArrayLike = Union[float, np.ndarray]

_NUMBER = r'(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?'
_TERM = re.compile(
    rf'\s*(?P<sign>[+-])?\s*(?:(?P<amplitude>{_NUMBER})\s*\*\s*)?'
    rf'(?P<form>[a-z]+)\s*\(\s*(?P<mu>{_NUMBER})\s*\)\s*'
)

class TermForm(str, Enum):
    """ Radial shapes of short-range terms; all decay faster than 1/r. """

    YUKAWA = 'yukawa'
    EXPONENTIAL = 'exponential'
    GAUSSIAN = 'gaussian'

@dataclass(frozen=True)
class ShortRangeTerm:
    """
    amplitude * form(mu; r) with yukawa = exp(-mu r) / r, exponential = exp(-mu r),
    gaussian = exp(-mu r^2).
    """

    amplitude: float
    form: TermForm
    mu: float

    def __post_init__ (self) -> None:
        try:
            object.__setattr__(self, 'form', TermForm(self.form))
        except ValueError as e:
            raise InvalidPotentialTermException(self.form, message=f'Unknown short-range form {self.form!r}.') from e
        if not self.mu > 0:
            raise InvalidPotentialTermException(self, message=f'Short-range term needs mu > 0, got {self.mu!r}.')

    def __call__ (self, r: ArrayLike) -> ArrayLike:
        r = np.asarray(r, dtype=float)
        if self.form is TermForm.YUKAWA:
            return self.amplitude * np.exp(-self.mu * r) / r
        if self.form is TermForm.EXPONENTIAL:
            return self.amplitude * np.exp(-self.mu * r)
        return self.amplitude * np.exp(-self.mu * r * r)

    def render (self) -> str:
        return f'{abs(self.amplitude)!r}*{self.form.value}({self.mu!r})'

def parseTerms (text: str) -> Tuple[ShortRangeTerm, ...]:
    """
    Parses a sum of short-range terms such as '-240*yukawa(1) + 320*yukawa(4)'.
    An empty string is the zero potential.

    :param text: term expression
    """

    terms = []
    position = 0
    text = text.strip()
    while position < len(text):
        match = _TERM.match(text, position)
        if not match or (terms and not match.group('sign')):
            raise InvalidPotentialTermException(text, message=f'Cannot parse short-range terms {text!r} at position {position}.')

        amplitude = float(match.group('amplitude') or 1.0)
        if match.group('sign') == '-':
            amplitude = -amplitude
        terms.append(ShortRangeTerm(amplitude, match.group('form'), float(match.group('mu'))))
        position = match.end()

    return tuple(terms)

def renderTerms (terms: Tuple[ShortRangeTerm, ...]) -> str:
    """ Inverse of parseTerms. """
    text = ''
    for i, term in enumerate(terms):
        if np.signbit(term.amplitude):
            text += '-' if i == 0 else ' - '
        elif i:
            text += ' + '
        text += term.render()
    return text

def sumOfTerms (terms: Tuple[ShortRangeTerm, ...]) -> Callable[[np.ndarray], np.ndarray]:
    """ Returns the vectorized radial function sum_i term_i(r). """
    def potential (r: ArrayLike) -> ArrayLike:
        total = np.zeros_like(np.asarray(r, dtype=float))
        for term in terms:
            total = total + term(r)
        return total
    return potential

@dataclass(frozen=True)
class PotentialModel:
    """
    Long-range part (Coulomb strength z, scalar confinement alpha1 r + alpha2 r^2,
    optional linear scalar S = s1 r) and short-range terms per channel.

    :param z: Coulomb strength Z of the vector potential Z e^2 / r
    :param alpha1: linear confinement of U
    :param alpha2: quadratic confinement of U
    :param s1: slope of a linear scalar potential S, entering U = S + S^2 / 2mc^2
    :param v4_short: short-range vector potential terms
    :param v0_short: short-range scalar potential terms
    """

    z: float = 0.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    s1: float = 0.0
    v4_short: Tuple[ShortRangeTerm, ...] = ()
    v0_short: Tuple[ShortRangeTerm, ...] = ()

    def __post_init__ (self) -> None:
        for name in ('v4_short', 'v0_short'):
            value = getattr(self, name)
            if isinstance(value, str):
                value = parseTerms(value)
            object.__setattr__(self, name, tuple(value))
        if self.s1 < 0:
            raise InvalidPotentialTermException(self.s1, message=f'Linear scalar slope s1 must be non-negative, got {self.s1!r}.')

    def longRange (self, consts: PhysicalConstants, relativistic: bool = True) -> LongRangeSpec:
        """
        Returns the long-range spec; S = s1 r adds s1 to alpha1 and, on the
        Feshbach-Villars path, s1^2 / 2mc^2 to alpha2.

        :param consts: physical constants
        :param relativistic: Feshbach-Villars or Schroedinger path
        """
        alpha1 = self.alpha1 + self.s1
        alpha2 = self.alpha2
        if relativistic and self.s1:
            alpha2 += self.s1**2 / (2.0 * consts.restEnergy)
        return LongRangeSpec(z=self.z, alpha1=alpha1, alpha2=alpha2, relativistic=relativistic)

    @property
    def hasShortRange (self) -> bool:
        return bool(self.v4_short or self.v0_short)

    def vectorShort (self) -> Callable[[np.ndarray], np.ndarray]:
        return sumOfTerms(self.v4_short)

    def scalarShort (self) -> Callable[[np.ndarray], np.ndarray]:
        return sumOfTerms(self.v0_short)

    def withoutShortRange (self) -> 'PotentialModel':
        return dataclasses.replace(self, v4_short=(), v0_short=())
