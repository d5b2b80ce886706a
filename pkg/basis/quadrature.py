#!/usr/bin/env python3

"""
A module for Gauss-Laguerre quadrature of Coulomb-Sturmian matrix elements.

With x = 2br every product <r|n><r|n'> carries the weight x^(2l+1) e^(-x), so

    int <r|n> f(r) <r|n'> dr = 1/(2b) sum_i w_i p_n(x_i) p_n'(x_i) x_i f(x_i / 2b)

is exact for polynomial f and serves as the reference for the analytic
matrix elements and for the short-range potentials.
"""

# stdlib modules
import logging
import functools

# third party modules
import numpy as np
from scipy.linalg import eigh_tridiagonal

# inner modules
from basis.sturmian import CsBasisSpec, laguerreTable

# exceptions
from basis.exceptions import *

# typing
from typing import Callable, Optional, Tuple

# typedef
RadialFunction = Callable[[np.ndarray], np.ndarray]

DEFAULT_TOLERANCE = 1e-12
MAX_NODES = 4096

@functools.lru_cache(maxsize=32)
def gaussLaguerre (nodes: int, alpha: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns the nodes and the log-weights of the generalized Gauss-Laguerre rule
    for the weight x^alpha e^(-x).

    Nodes are the eigenvalues of the Jacobi matrix (Golub-Welsch) polished by one
    Newton step; weights are the Christoffel numbers 1 / sum_k p_k(x_i)^2, kept in
    log space so that large rules neither overflow nor underflow.

    :param nodes: number of nodes
    :param alpha: Laguerre parameter, alpha > -1
    """

    k = np.arange(nodes, dtype=float)
    diag = 2.0 * k + alpha + 1.0
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    x = eigh_tridiagonal(diag, off, eigvals_only=True)

    _, _, _, ratio = laguerreTable(x, alpha, count=nodes, derivative=True)
    x = x - ratio

    _, _, logNormSq, _ = laguerreTable(x, alpha, count=nodes)
    logWeights = -logNormSq

    x.setflags(write=False)
    logWeights.setflags(write=False)
    return x, logWeights

def _quadratureMatrix (spec: CsBasisSpec, size: int, f: RadialFunction, nodes: int) -> np.ndarray:
    x, logWeights = gaussLaguerre(nodes, spec.alpha)
    logAbs, sign, _, _ = laguerreTable(x, spec.alpha, count=0, keep=size)
    q = sign * np.exp(logAbs + 0.5 * logWeights)

    r = x / (2.0 * spec.b)
    values = np.broadcast_to(np.asarray(f(r), dtype=float), r.shape)
    return (q * (x * values / (2.0 * spec.b))) @ q.T

def quadratureMatrix (spec: CsBasisSpec, size: int, f: RadialFunction, nodes: Optional[int] = None,
                      tolerance: float = DEFAULT_TOLERANCE, maxNodes: int = MAX_NODES) -> np.ndarray:
    """
    Returns the dense size x size matrix of int <r|n> f(r) <r|n'> dr.

    The node count starts at 2 * size + 32 (or `nodes`) and is doubled until the
    largest change is below tolerance * max(1, max |element|).

    :param spec: basis specification
    :param size: number of basis functions
    :param f: vectorized radial function
    :param nodes: initial node count
    :param tolerance: relative stability threshold under node doubling
    :param maxNodes: node count beyond which QuadratureConvergenceException is raised
    """

    count = nodes if nodes else 2 * size + 32
    previous = _quadratureMatrix(spec, size, f, count)
    change = np.inf

    while 2 * count <= maxNodes:
        count *= 2
        current = _quadratureMatrix(spec, size, f, count)
        change = float(np.max(np.abs(current - previous)))
        if change <= tolerance * max(1.0, float(np.max(np.abs(current)))):
            logging.debug(f'Quadrature of a {size}x{size} matrix stable at {count} nodes.')
            return current
        previous = current

    raise QuadratureConvergenceException(count, change)

def quadratureElement (spec: CsBasisSpec, n: int, m: int, f: RadialFunction, **kwargs) -> float:
    """
    Returns int <r|n> f(r) <r|m> dr.

    :param spec: basis specification
    :param n: row index
    :param m: column index
    :param f: vectorized radial function
    """
    if n < 0 or m < 0:
        raise BasisDomainException(min(n, m), 0.0, message=f'Negative basis index in ({n}, {m}).')
    return float(quadratureMatrix(spec, max(n, m) + 1, f, **kwargs)[n, m])
