#!/usr/bin/env python3

""" A module for the Pauli-matrix structure and default physical constants """

# third party modules
import numpy as np

TAU_1 = np.array([[0.0, 1.0], [1.0, 0.0]])
# i * tau_2, kept real
I_TAU_2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
TAU_3 = np.array([[1.0, 0.0], [0.0, -1.0]])
IDENTITY_2 = np.eye(2)

# tau_3 + i tau_2, the nilpotent kinetic structure
KINETIC_TAU = TAU_3 + I_TAU_2

for _matrix in (TAU_1, I_TAU_2, TAU_3, IDENTITY_2, KINETIC_TAU):
    _matrix.setflags(write=False)

# units with m = hbar = e^2 = 1
DEFAULT_MASS = 1.0
DEFAULT_HBAR = 1.0
DEFAULT_C = 137.036
DEFAULT_E2 = 1.0

# CS indices per block when r or r^2 terms are present
CONFINEMENT_GROUP = 3
