#!/usr/bin/env python3

""" All exceptions raised by the solver package """

class InvalidSearchWindowException(Exception):
    """
    Raised when a search window is empty or reaches into the upper half plane.

    Attributes:
        field : name of the offending field
        value : value that was rejected
    """
    def __init__(self, field: str, value: object, message: str = None) -> None:
        self.field = field
        self.value = value
        if not message:
            message = f'Invalid search window: {field} = {value!r}.'
        self.message = message
        super().__init__(self.message)

class RootIterationException(Exception):
    """
    Raised when a root iteration started from a guess does not converge.

    Attributes:
        guess : starting energy
        iterations : iterations performed
    """
    def __init__(self, guess: complex, iterations: int, message: str = None) -> None:
        self.guess = guess
        self.iterations = iterations
        if not message:
            message = f'Root iteration from {guess} did not converge in {iterations} iterations.'
        self.message = message
        super().__init__(self.message)

class InvalidSearchModeException(Exception):
    """ Raised when a root search is asked for an unknown mode. """
    def __init__(self, mode: object, message: str = None) -> None:
        self.mode = mode
        if not message:
            message = f"Unknown search mode {mode!r}; expected 'bound', 'resonance' or 'both'."
        self.message = message
        super().__init__(self.message)
