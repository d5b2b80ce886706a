#!/usr/bin/env python3

""" All exceptions raised by the potentials package """

class InvalidPotentialTermException(Exception):
    """
    Raised when a short-range term cannot be parsed or does not decay faster than 1/r.

    Attributes:
        term : offending term (text or object)
    """
    def __init__(self, term: object, message: str = None) -> None:
        self.term = term
        if not message:
            message = f'Invalid short-range potential term {term!r}.'
        self.message = message
        super().__init__(self.message)

class DegeneratePotentialException(Exception):
    """
    Raised when the short-range matrix on the large basis cannot be inverted
    (e.g. an identically zero potential), so no low-rank form exists.

    Attributes:
        channel : 'v4' or 'v0'
        condition : condition number estimate
    """
    def __init__(self, channel: str, condition: float, message: str = None) -> None:
        self.channel = channel
        self.condition = condition
        if not message:
            message = f'Short-range matrix of channel {channel} is degenerate (condition {condition:.3e}).'
        self.message = message
        super().__init__(self.message)

class InvalidRankException(Exception):
    """
    Raised when the low-rank size does not fit the large basis.

    Attributes:
        rank : requested size of the result
        size : size of the large matrix
    """
    def __init__(self, rank: int, size: int, message: str = None) -> None:
        self.rank = rank
        self.size = size
        if not message:
            message = f'Cannot truncate a {size}x{size} matrix to {rank}.'
        self.message = message
        super().__init__(self.message)
