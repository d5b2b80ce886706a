#!/usr/bin/env python3

""" Constants of the spectrum solver """

# real-axis scan
GRID_POINTS = 200

# root refinement, relative to 1 + |E|
ROOT_TOLERANCE = 1e-10
DEDUPLICATION_TOLERANCE = 1e-8
BOUND_IMAG_TOLERANCE = 1e-10

# energy shift when a singular block is hit
POLE_PERTURBATION = 1e-12

# Muller iteration
MULLER_STEP = 1e-3
MULLER_MAX_ITERATIONS = 100
MULLER_MAX_HALVINGS = 30

# root shift allowed when the continued-fraction depth is halved, relative to 1 + |E|
DEPTH_TOLERANCE = 1e-7

# residual accepted at a root, relative to the largest singular value
RESIDUAL_TOLERANCE = 1e-8

# second smallest singular value below this (relative) flags a degenerate root
DEGENERACY_TOLERANCE = 1e-8

# |<psi|tau_3|psi>| below this (for |psi| = 1) leaves the particle sign undetermined
NORM_TOLERANCE = 1e-6

# step of the central difference for dD/dE, relative to 1 + |E|
DERIVATIVE_STEP = 1e-6

KIND_BOUND = 'bound'
KIND_RESONANCE = 'resonance'
