#!/usr/bin/env python3

"""
A module for Muller's method: three-point quadratic interpolation for roots of
an analytic function in the complex plane, without derivatives.
"""

# stdlib modules
import logging

# third party modules
import numpy as np

# inner modules
from solver import const

# exceptions
from solver.exceptions import *

# typing
from typing import Callable, List, Optional

# typedef
ComplexFunction = Callable[[complex], complex]

class Muller:
    """
    Root finder based on Muller's method, with deflation by previously found roots.

    :param func: analytic function whose roots are wanted
    :param xtol: absolute step below which the iteration stops
    :param rtol: step relative to |x| below which the iteration stops
    :param maxiter: iterations per root
    :param step: spread of the three starting points around a guess
    """

    def __init__ (self, func: ComplexFunction, xtol: float = const.ROOT_TOLERANCE,
                  rtol: float = const.ROOT_TOLERANCE, maxiter: int = const.MULLER_MAX_ITERATIONS,
                  step: float = const.MULLER_STEP) -> None:
        self.func = func
        self.xtol = xtol
        self.rtol = rtol
        self.maxiter = maxiter
        self.step = step
        self.roots: List[complex] = []
        self.iterations: List[int] = []

    def deflated (self, x: complex) -> complex:
        """ func(x) / prod (x - root) over the roots found so far. """
        y = self.func(x)
        for root in self.roots:
            denominator = x - root
            if abs(denominator) < 1e-14 * (1.0 + abs(root)):
                denominator = 1e-14 * (1.0 + abs(root))
            y = y / denominator
        return y

    def solve (self, guess: complex, step: Optional[float] = None) -> complex:
        """
        Returns a root near `guess`; raises RootIterationException when the iteration does not converge.

        :param guess: starting point
        :param step: spread of the starting points (defaults to self.step)
        """

        guess = complex(guess)
        h = (step or self.step) * (1.0 + abs(guess))
        xs = np.array([guess - h, guess + h, guess], dtype=complex)
        fs = np.array([self.deflated(x) for x in xs], dtype=complex)
        h = xs[2] - xs[1]
        q = h / (xs[1] - xs[0])

        for i in range(self.maxiter):
            if fs[2] == 0:
                break

            a = q * fs[2] - q * (1 + q) * fs[1] + q**2 * fs[0]
            b = (2 * q + 1) * fs[2] - (1 + q)**2 * fs[1] + q**2 * fs[0]
            c = (1 + q) * fs[2]
            root = np.sqrt(b**2 - 4 * a * c)
            denominator = b + root if abs(b + root) >= abs(b - root) else b - root

            xs[0], xs[1] = xs[1], xs[2]
            fs[0], fs[1] = fs[1], fs[2]
            if denominator == 0:
                h = self.step * (1.0 + abs(xs[2]))
                xs[2] += h
                fs[2] = self.deflated(xs[2])
            else:
                q = -2.0 * c / denominator
                h *= q
                xs[2] += h
                previous = 100.0 * abs(fs[1])
                for _ in range(const.MULLER_MAX_HALVINGS):
                    fs[2] = self.deflated(xs[2])
                    if np.isfinite(fs[2]) and abs(fs[2]) < previous:
                        break
                    h *= 0.5
                    xs[2] -= h

            q = (xs[2] - xs[1]) / (xs[1] - xs[0]) if xs[1] != xs[0] else q
            if abs(h) <= self.xtol or abs(h) <= self.rtol * abs(xs[2]):
                break
        else:
            raise RootIterationException(guess, self.maxiter)

        logging.debug(f'Muller root {xs[2]} from {guess} after {i + 1} iterations.')
        self.roots.append(complex(xs[2]))
        self.iterations.append(i + 1)
        return complex(xs[2])
