#!/usr/bin/env python3

"""
The command-line driver.

    fv0 solve|scan|elements|wavefunction|defaults --config FILE [--out DIR] [--override section.key=value]
"""

# stdlib modules
import os
import sys
import logging
import argparse

# third party modules
import numpy as np

# inner modules
from basis import sturmian
from solver.spectrum import SpectrumSolver
from solver.states import StateResult, wavefunctionOnGrid
from cli import const, output, apputils
from cli.config import RunConfig, parseConfig, parseConfigFile, renderConfig

# exceptions
from cli.exceptions import *

# typing
from typing import Dict, List, Optional, Sequence, Tuple

class App:
    """
    Runs one command on a validated configuration and writes its output files.

    :param config: run configuration
    :param out: output directory (created when missing)
    """

    def __init__ (self, config: RunConfig, out: str = '.') -> None:
        self.config = config
        self.out = out
        self.failures: List[str] = []
        os.makedirs(out, exist_ok=True)

    def solver (self, path: str) -> SpectrumSolver:
        """
        Returns the spectrum solver of one path.

        :param path: fv0 or schrodinger
        """
        config = self.config
        settings = config.solver
        return SpectrumSolver(config.spec(), config.potential.model(), config.constants.physical(),
                              relativistic=path == const.PATH_FV0, seedPolicy=settings.seed_policy,
                              cfTolerance=settings.cf_tolerance, strict=settings.strict,
                              condLimit=config.potential.cond_limit, lowRank=config.potential.low_rank,
                              gridPoints=settings.grid_points, rootTolerance=settings.root_tolerance,
                              depthTolerance=settings.depth_tolerance)

    def findStates (self) -> Dict[str, List[StateResult]]:
        """ Returns the states of every requested path. """
        results = {}
        window = self.config.solver.window()
        for path in self.config.solver.paths:
            logging.info(f'Searching {self.config.solver.mode} states on the {path} path...')
            states = self.solver(path).findRoots(window, self.config.solver.mode)
            if not states:
                logging.info(f'No states found on the {path} path.')
            for state in states:
                if not state.converged:
                    self.failures.append(f'{path} state at {state.e_bind} not converged')
            results[path] = states
        return results

    def solve (self) -> int:
        """ Finds the states and writes states.json. """
        results = self.findStates()
        output.writeStates(self.out, self.config, results, self.failures)
        return const.EXIT_UNCONVERGED if self.failures else const.EXIT_OK

    def scan (self, points: Optional[int] = None, imag: float = 0.0) -> int:
        """
        Tabulates the indicator along Re E in the window at a fixed Im E and writes scan.csv.

        :param points: number of energies (defaults to solver.grid_points)
        :param imag: imaginary part of the energies
        """
        settings = self.config.solver
        grid = np.linspace(settings.re_min, settings.re_max, points or settings.grid_points) + 1j * imag
        rows = []
        for path in settings.paths:
            values = self.solver(path).scan(grid)
            rows += [(path, e.real, e.imag, d.real, d.imag) for e, d in zip(grid, values)]
        output.writeTable(self.out, const.SCAN_FILE, ('path', 're_e', 'im_e', 're_d', 'im_d'), rows)
        return const.EXIT_OK

    def elements (self, size: int = 4) -> int:
        """
        Writes the Coulomb-Sturmian matrices of the configured basis to elements.csv.

        :param size: number of basis functions
        """
        spec = self.config.spec()
        matrices = {
            'overlap': sturmian.overlapMatrix,
            'p2': sturmian.p2Matrix,
            'inverse_r': sturmian.inverseRMatrix,
            'r': sturmian.rMatrix,
            'r2': sturmian.r2Matrix,
        }
        rows = []
        for name in const.ELEMENT_MATRICES:
            dense = matrices[name](spec, size).toDense()
            rows += [(name, n, m, float(dense[n, m])) for n in range(size) for m in range(size)]
        output.writeTable(self.out, const.ELEMENTS_FILE, ('matrix', 'n', 'm', 'value'), rows)
        return const.EXIT_OK

    def wavefunction (self, index: int = 0, rMax: float = 20.0, points: int = 200) -> int:
        """
        Solves, then writes phi(r) and chi(r) of one state to wavefunction.csv.

        :param index: position of the state in states.json
        :param rMax: largest radius
        :param points: number of radii
        """
        results = self.findStates()
        states: List[Tuple[str, StateResult]] = [(path, s) for path in self.config.solver.paths for s in results[path]]
        output.writeStates(self.out, self.config, results, self.failures)
        if not 0 <= index < len(states):
            raise UnknownStateException(index, len(states))

        path, state = states[index]
        r = np.linspace(rMax / points, rMax, points)
        phi, chi = wavefunctionOnGrid(state, self.config.spec(), r)
        rows = [(x, p.real, p.imag, c.real, c.imag) for x, p, c in zip(r, phi, chi)]
        output.writeTable(self.out, const.WAVEFUNCTION_FILE, ('r', 're_phi', 'im_phi', 're_chi', 'im_chi'), rows)
        return const.EXIT_UNCONVERGED if self.failures else const.EXIT_OK

def argumentParser () -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=const.PROGRAM,
                                     description='Bound and resonant states of the Feshbach-Villars (Klein-Gordon) '
                                                 'equation in a Coulomb-Sturmian basis.')
    parser.add_argument('command', choices=('solve', 'scan', 'elements', 'wavefunction', 'defaults'))
    parser.add_argument('--config', help='INI configuration file (all keys optional, see `defaults`)')
    parser.add_argument('--out', default='.', help='output directory')
    parser.add_argument('--override', action='append', default=[], metavar='SECTION.KEY=VALUE',
                        help='override a configuration value, may be repeated')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    parser.add_argument('--size', type=int, default=4, help='elements: number of basis functions')
    parser.add_argument('--points', type=int, default=None, help='scan, wavefunction: number of points')
    parser.add_argument('--imag', type=float, default=0.0, help='scan: imaginary part of the energies')
    parser.add_argument('--state', type=int, default=0, help='wavefunction: index of the state')
    parser.add_argument('--r-max', type=float, default=20.0, help='wavefunction: largest radius')
    return parser

def run (argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line and returns the exit status.

    :param argv: arguments without the program name
    """

    args = argumentParser().parse_args(argv)
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.INFO)

    try:
        if args.config:
            config = parseConfigFile(args.config, args.override)
        else:
            config = parseConfig('', args.override)

        if args.command == 'defaults':
            sys.stdout.write(renderConfig(config))
            return const.EXIT_OK

        app = App(config, args.out)
        if args.command == 'solve':
            return app.solve()
        if args.command == 'scan':
            return app.scan(args.points, args.imag)
        if args.command == 'elements':
            return app.elements(args.size)
        return app.wavefunction(args.state, args.r_max, args.points or 200)

    except (ConfigParseException, ConfigValueException) as e:
        logging.error(f'Configuration error: {e.message}')
        return const.EXIT_CONFIG_ERROR
    except OSError as e:
        logging.error(f'{apputils.exceptionName(e)}: "{e}"')
        return const.EXIT_CONFIG_ERROR if args.config and not os.path.exists(args.config) else const.EXIT_UNEXPECTED
    except UnknownStateException as e:
        logging.error(e.message)
        return const.EXIT_UNCONVERGED
    except Exception as e:
        logging.error(f'An unexpected error occured.\n{apputils.exceptionName(e)}: "{e}"')
        return const.EXIT_UNEXPECTED
