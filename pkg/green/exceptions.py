#!/usr/bin/env python3

""" All exceptions raised by the green package """

class SingularTailException(Exception):
    """ Raised when the asymptotic off-diagonal block J' cannot be inverted. """
    def __init__(self, energy: complex, message: str = None) -> None:
        self.energy = energy
        if not message:
            message = f"Asymptotic block J' is singular at energy {energy}."
        self.message = message
        super().__init__(self.message)

class DefectiveSquareRootException(Exception):
    """ Raised when B^2 - 4 is a non-zero nilpotent matrix, which has no square root. """
    def __init__(self, matrix: object, message: str = None) -> None:
        self.matrix = matrix
        if not message:
            message = f'Matrix has no square root (defective zero eigenvalue):\n{matrix}'
        self.message = message
        super().__init__(self.message)

class SingularBlockException(Exception):
    """
    Raised when a block of the continued fraction cannot be inverted.
    This happens at an eigenvalue of a truncated sub-problem, i.e. at a pole of the indicator.

    Attributes:
        index : block index at which the recursion broke down
    """
    def __init__(self, index: int, message: str = None) -> None:
        self.index = index
        if not message:
            message = f'Singular block at index {index} of the continued fraction.'
        self.message = message
        super().__init__(self.message)

class InvalidSeedPolicyException(Exception):
    """ Raised when a seed policy is not applicable to the long-range potential. """
    def __init__(self, policy: str, message: str = None) -> None:
        self.policy = policy
        if not message:
            message = f'Seed policy {policy!r} is only available for the pure Coulomb case.'
        self.message = message
        super().__init__(self.message)

class ContinuedFractionConvergenceException(Exception):
    """
    Raised in strict mode when the corner correction changes more than the
    tolerance between half and full depth.

    Attributes:
        depth : depth that was used
        change : relative change of the corner correction
    """
    def __init__(self, depth: int, change: float, message: str = None) -> None:
        self.depth = depth
        self.change = change
        if not message:
            message = f'Continued fraction not converged at depth {depth} (relative change {change:.3e}).'
        self.message = message
        super().__init__(self.message)

class InvalidDepthException(Exception):
    """
    Raised when a continued fraction is asked to run upwards.

    Attributes:
        start : deepest level to invert
        stop : level to return
    """
    def __init__(self, start: int, stop: int, message: str = None) -> None:
        self.start = start
        self.stop = stop
        if not message:
            message = f'Continued fraction must run downwards, got start {start} < stop {stop}.'
        self.message = message
        super().__init__(self.message)

class InvalidBranchException(Exception):
    """ Raised when a tail branch other than +1 or -1 is requested. """
    def __init__(self, branch: object, message: str = None) -> None:
        self.branch = branch
        if not message:
            message = f'Branch must be +1 or -1, got {branch!r}.'
        self.message = message
        super().__init__(self.message)
