#!/usr/bin/env python3

""" Constants of the command-line driver """

PROGRAM = 'fv0'

FORMAT_VERSION = 1

# exit codes
EXIT_OK = 0
EXIT_UNCONVERGED = 1
EXIT_CONFIG_ERROR = 2
EXIT_UNEXPECTED = 3

# output files
STATES_FILE = 'states.json'
SCAN_FILE = 'scan.csv'
ELEMENTS_FILE = 'elements.csv'
WAVEFUNCTION_FILE = 'wavefunction.csv'

FLOAT_FORMAT = '%.17g'

SECTIONS = ('constants', 'basis', 'potential', 'solver')

# continued-fraction depth when n_cf_start is not given
DEPTH_COULOMB = 5000
DEPTH_CONFINEMENT = 2000

PATH_FV0 = 'fv0'
PATH_SCHRODINGER = 'schrodinger'

# matrices dumped by the elements command
ELEMENT_MATRICES = ('overlap', 'p2', 'inverse_r', 'r', 'r2')
