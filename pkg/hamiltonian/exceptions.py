#!/usr/bin/env python3

""" All exceptions raised by the hamiltonian package """

class InvalidConstantsException(Exception):
    """ Raised when a physical constant is not strictly positive. """
    def __init__(self, name: str, value: float, message: str = None) -> None:
        self.name = name
        self.value = value
        if not message:
            message = f'Physical constant {name} must be positive, got {value!r}.'
        self.message = message
        super().__init__(self.message)

class InvalidLongRangeException(Exception):
    """ Raised when the long-range potential parameters are invalid (e.g. negative confinement). """
    def __init__(self, name: str, value: float, message: str = None) -> None:
        self.name = name
        self.value = value
        if not message:
            message = f'Long-range parameter {name} = {value!r} is not allowed.'
        self.message = message
        super().__init__(self.message)

class BlockGroupingException(Exception):
    """
    Raised when the requested number of blocks cannot be assembled.

    Attributes:
        nBlocks : requested number of blocks
        available : number of blocks the operator was built for
    """
    def __init__(self, nBlocks: int, available: int, message: str = None) -> None:
        self.nBlocks = nBlocks
        self.available = available
        if not message:
            message = f'Requested {nBlocks} blocks from an operator holding {available}.'
        self.message = message
        super().__init__(self.message)

class BlockShapeException(Exception):
    """
    Raised when block arrays do not form a block-tridiagonal operator.

    Attributes:
        shape : offending shape
    """
    def __init__(self, shape: tuple, message: str = None) -> None:
        self.shape = shape
        if not message:
            message = f'Invalid block shape {shape}.'
        self.message = message
        super().__init__(self.message)
