#!/usr/bin/env python3

""" All exceptions raised by the basis package """

class InvalidBasisSpecException(Exception):
    """
    Raised when a CsBasisSpec violates its invariants.

    Attributes:
        field : name of the offending field
        value : value that was rejected
    """
    def __init__(self, field: str, value: object, message: str = None) -> None:
        self.field = field
        self.value = value
        if not message:
            message = f'Invalid basis parameter {field} = {value!r}.'
        self.message = message
        super().__init__(self.message)

class BasisDomainException(Exception):
    """ Raised when a basis function is evaluated outside of its domain (n < 0 or r <= 0). """
    def __init__(self, n: int, r: float, message: str = None) -> None:
        self.n = n
        self.r = r
        if not message:
            message = f'Coulomb-Sturmian function undefined for n = {n}, r = {r}.'
        self.message = message
        super().__init__(self.message)

class QuadratureConvergenceException(Exception):
    """
    Raised when doubling the number of Gauss-Laguerre nodes does not stabilize a matrix element.

    Attributes:
        nodes : largest node count that was tried
        change : last observed change between two node counts
    """
    def __init__(self, nodes: int, change: float, message: str = None) -> None:
        self.nodes = nodes
        self.change = change
        if not message:
            message = f'Quadrature did not stabilize with {nodes} nodes (last change {change:.3e}).'
        self.message = message
        super().__init__(self.message)

class MatrixSizeException(Exception):
    """
    Raised when a basis matrix is requested or regrouped with an impossible size.

    Attributes:
        size : size that was requested or found
    """
    def __init__(self, size: object, message: str = None) -> None:
        self.size = size
        if not message:
            message = f'Invalid basis matrix size {size!r}.'
        self.message = message
        super().__init__(self.message)
