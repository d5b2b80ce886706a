#!/usr/bin/env python3

""" A module for the physical constants and the long-range part of the potential """

# stdlib modules
from dataclasses import dataclass

# inner modules
from hamiltonian import const

# exceptions
from hamiltonian.exceptions import *

@dataclass(frozen=True)
class PhysicalConstants:
    """
    Mass, reduced Planck constant, speed of light and the unit of charge squared.
    """

    m: float = const.DEFAULT_MASS
    hbar: float = const.DEFAULT_HBAR
    c: float = const.DEFAULT_C
    e2: float = const.DEFAULT_E2

    def __post_init__ (self) -> None:
        for name in ('m', 'hbar', 'c', 'e2'):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidConstantsException(name, value)

    @property
    def restEnergy (self) -> float:
        return self.m * self.c**2

    @property
    def kineticFactor (self) -> float:
        """ hbar^2 / 2m """
        return self.hbar**2 / (2.0 * self.m)

    @property
    def fineStructure (self) -> float:
        return self.e2 / (self.hbar * self.c)

@dataclass(frozen=True)
class LongRangeSpec:
    """
    Long-range potential: Coulomb-like vector potential Z e^2 / r and the scalar
    confinement U = alpha1 r + alpha2 r^2, on the Feshbach-Villars or Schroedinger path.
    """

    z: float = 0.0
    alpha1: float = 0.0
    alpha2: float = 0.0
    relativistic: bool = True

    def __post_init__ (self) -> None:
        for name in ('alpha1', 'alpha2'):
            value = getattr(self, name)
            if value < 0:
                raise InvalidLongRangeException(name, value, message=f'Confinement {name} must be non-negative, got {value!r}.')

    @property
    def confining (self) -> bool:
        return self.alpha1 != 0 or self.alpha2 != 0

    @property
    def groupSize (self) -> int:
        """ Number of CS indices per block. """
        return const.CONFINEMENT_GROUP if self.confining else 1

    @property
    def components (self) -> int:
        return 2 if self.relativistic else 1

    @property
    def blockDim (self) -> int:
        return self.groupSize * self.components

    def restEnergy (self, consts: PhysicalConstants) -> float:
        """ Energy offset between total and reported energies. """
        return consts.restEnergy if self.relativistic else 0.0
