#!/usr/bin/env python3

"""
A module for the asymptotic tail of the Coulomb continued fraction.

Far out in the basis J_{n,n} ~ J n and J_{n,n+1} ~ J' n, so C_{n} ~ C / n with

    C = (J - J' C J')^-1

With B = J'^-1 J and X = C J' this is the quadratic matrix equation
X^2 - B X + 1 = 0, solved by X = (B +- sqrt(B^2 - 4)) / 2. The next order of
the expansion, C_n ~ C / nu + D / nu^2, carries the Coulomb charge.
"""

# stdlib modules
import logging
from dataclasses import dataclass

# third party modules
import numpy as np

# inner modules
from basis.sturmian import CsBasisSpec
from hamiltonian.physics import PhysicalConstants

# exceptions
from green.exceptions import *

# typing
from typing import List, Optional, Tuple

# J' with a condition number above this is treated as singular
SINGULAR_CONDITION = 1e14
SQRT_RESIDUAL = 1e-8
# eigenvalues of B this close to +-2, per unit condition of J', are taken as the edge
EDGE_SNAP = 64 * np.finfo(float).eps
DEGENERATE_GAP = 1e-8
STEIN_RCOND = 1e-10
BRANCH_MATCH = 1e-10

def mrdivide (a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """ a @ inv(b) """
    return np.linalg.solve(b.T, a.T).T

@dataclass(frozen=True)
class TailBlocks:
    """
    Asymptotic coefficients and the solved tail matrix.

    :param j_block: asymptotic diagonal coefficient J
    :param jp_block: asymptotic off-diagonal coefficient J'
    :param c_tail: solution C of C = (J - J' C J')^-1
    :param branch: +1 or -1, sign of the square root in X = (B + branch sqrt(B^2 - 4)) / 2
    :param c_next: coefficient D of the 1 / nu^2 correction
    """

    j_block: np.ndarray
    jp_block: np.ndarray
    c_tail: np.ndarray
    branch: int
    c_next: Optional[np.ndarray] = None

    def residual (self) -> float:
        """ Returns ||C - (J - J' C J')^-1|| / ||C||. """
        c = self.c_tail
        fixedPoint = np.linalg.inv(self.j_block - self.jp_block @ c @ self.jp_block)
        return float(np.linalg.norm(c - fixedPoint) / np.linalg.norm(c))

    def seed (self, index: int, l: int) -> np.ndarray:
        """
        Returns the estimate C_index ~ C / nu + D / nu^2 with nu = index + l + 1.

        :param index: block index of the seeded level
        :param l: orbital angular momentum
        """
        nu = index + l + 1
        if self.c_next is None:
            return self.c_tail / nu
        return self.c_tail / nu + self.c_next / nu**2

def asymptoticFromRest (consts: PhysicalConstants, eps: complex, b: float, relativistic: bool = True) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns (J, J') for the energy eps measured from the rest energy.

    :param consts: physical constants
    :param eps: energy minus mc^2 (the energy itself on the Schroedinger path)
    :param b: CS scale parameter
    :param relativistic: Feshbach-Villars (2x2) or Schroedinger (1x1) blocks
    """

    eps = complex(eps)
    kinetic = consts.kineticFactor * b
    if not relativistic:
        return (np.array([[eps / b - kinetic]]),
                np.array([[-eps / (2 * b) - kinetic / 2]]))

    upper = eps
    lower = eps + 2.0 * consts.restEnergy
    jBlock = np.array([[upper / b - kinetic, -kinetic],
                       [kinetic, lower / b + kinetic]])
    jpBlock = np.array([[-upper / (2 * b) - kinetic / 2, -kinetic / 2],
                        [kinetic / 2, -lower / (2 * b) + kinetic / 2]])
    return jBlock, jpBlock

def asymptoticBlocks (consts: PhysicalConstants, energy: complex, spec: CsBasisSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Returns the Feshbach-Villars asymptotic blocks (J, J') at total energy E.

    :param consts: physical constants
    :param energy: total energy
    :param spec: basis specification (only b is used)
    """
    return asymptoticFromRest(consts, complex(energy) - consts.restEnergy, spec.b, relativistic=True)

def wavenumberSquared (consts: PhysicalConstants, eps: complex, relativistic: bool = True) -> complex:
    """
    k^2 = (E^2 - m^2 c^4) / (hbar c)^2 on the Feshbach-Villars path, 2 m eps / hbar^2 otherwise.

    :param consts: physical constants
    :param eps: energy measured from the rest energy
    :param relativistic: path selector
    """
    eps = complex(eps)
    if relativistic:
        k2 = eps * (eps + 2.0 * consts.restEnergy) / (consts.hbar * consts.c)**2
    else:
        k2 = eps / consts.kineticFactor
    # +0j keeps the negative real axis on the bound-state side of the cut
    if k2.imag == 0:
        k2 = complex(k2.real, 0.0)
    return k2

def outgoingFactor (k2: complex, b: float) -> complex:
    """
    Eigenvalue of X that belongs to the outgoing (or decaying) solution:
    x = -(k - ib) / (k + ib) with k the principal square root of k^2.

    :param k2: wavenumber squared
    :param b: CS scale parameter
    """
    k = np.sqrt(complex(k2))
    return complex(-(k - 1j * b) / (k + 1j * b))

def _eigenvalues2x2 (m: np.ndarray) -> np.ndarray:
    if m.shape == (1, 1):
        return m[0]
    return np.linalg.eigvals(m)

def squareRootCandidates (m: np.ndarray) -> List[np.ndarray]:
    """
    Returns the square roots of a 1x1 or 2x2 matrix from the closed form

        sqrt(M) = (M + s) / t,  s = +-sqrt(det M),  t = +-sqrt(tr M + 2 s)

    keeping those with ||R^2 - M|| small.

    :param m: 1x1 or 2x2 complex matrix
    """

    m = np.asarray(m, dtype=complex)
    if m.shape == (1, 1):
        root = np.sqrt(m[0, 0])
        return [np.array([[root]]), np.array([[-root]])]
    if m.shape != (2, 2):
        raise DefectiveSquareRootException(m, message=f'Closed-form square root needs a 1x1 or 2x2 matrix, got {m.shape}.')

    scale = float(np.max(np.abs(m)))
    if scale == 0.0:
        return [np.zeros((2, 2), dtype=complex)]

    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    trace = m[0, 0] + m[1, 1]
    identity = np.eye(2)

    candidates = []
    for s in (np.sqrt(det), -np.sqrt(det)):
        t2 = trace + 2.0 * s
        if abs(t2) <= 1e-14 * (abs(trace) + abs(s) + scale):
            continue
        t = np.sqrt(t2)
        root = (m + s * identity) / t
        if np.linalg.norm(root @ root - m) <= SQRT_RESIDUAL * (1.0 + np.linalg.norm(m)):
            candidates.extend([root, -root])

    if not candidates:
        raise DefectiveSquareRootException(m)
    return candidates

def principalSquareRoot (m: np.ndarray) -> np.ndarray:
    """
    Returns the square root whose eigenvalues have the largest (non-negative) real parts.

    :param m: 1x1 or 2x2 complex matrix
    """
    candidates = squareRootCandidates(m)
    return max(candidates, key=lambda root: float(np.min(_eigenvalues2x2(root).real)))

def _solventEigenvalue (eigenvalue: complex, branch: int, snap: float) -> complex:
    """
    Returns the root of x^2 - eigenvalue x + 1 = 0 on the given branch.

    A channel with eigenvalue +-2 has the double root eigenvalue / 2; within `snap`
    of it the square root is taken as zero. The smaller root is formed as the
    reciprocal of the larger one.
    """

    eigenvalue = complex(eigenvalue)
    for edge in (2.0, -2.0):
        if abs(eigenvalue - edge) <= snap:
            return edge / 2.0

    root = branch * np.sqrt(eigenvalue * eigenvalue - 4.0)
    large = (eigenvalue + root) / 2.0
    small = (eigenvalue - root) / 2.0
    return large if abs(large) >= abs(small) else 1.0 / small

def _closedFormSolvent (bMatrix: np.ndarray, branch: int) -> np.ndarray:
    identity = np.eye(bMatrix.shape[0])
    root = branch * principalSquareRoot(bMatrix @ bMatrix - 4.0 * identity)
    plus = bMatrix + root
    minus = bMatrix - root
    if np.linalg.norm(plus) >= np.linalg.norm(minus):
        return plus / 2.0
    return 2.0 * np.linalg.inv(minus)

def solveTail (jBlock: np.ndarray, jpBlock: np.ndarray, branch: int = 1) -> np.ndarray:
    """
    Returns C = X J'^-1 where X = (B + branch sqrt(B^2 - 4)) / 2 and B = J'^-1 J.

    X is evaluated channel by channel on the eigenvalues of B and recombined with
    the spectral projectors of B. On the Feshbach-Villars path B always has the
    eigenvalue -2 (the kinetic spin matrix is nilpotent), where B^2 - 4 is singular
    and a matrix square root would lose half of the digits; that channel gets x = -1
    exactly. Degenerate eigenvalues fall back to the closed-form matrix root.

    :param jBlock: asymptotic diagonal coefficient J
    :param jpBlock: asymptotic off-diagonal coefficient J'
    :param branch: +1 or -1
    """

    jBlock = np.asarray(jBlock, dtype=complex)
    jpBlock = np.asarray(jpBlock, dtype=complex)
    if branch not in (1, -1):
        raise InvalidBranchException(branch)

    condition = float(np.linalg.cond(jpBlock))
    if condition > SINGULAR_CONDITION:
        raise SingularTailException(None, message=f"Asymptotic block J' is singular:\n{jpBlock}")

    bMatrix = np.linalg.solve(jpBlock, jBlock)
    # rounding in B grows with the condition of J'
    snap = EDGE_SNAP * condition * (1.0 + np.linalg.norm(bMatrix))
    if bMatrix.shape == (1, 1):
        x = np.array([[_solventEigenvalue(bMatrix[0, 0], branch, snap)]])
        return mrdivide(x, jpBlock)

    first, second = np.linalg.eigvals(bMatrix)
    gap = first - second
    if abs(gap) <= DEGENERATE_GAP * (1.0 + abs(first) + abs(second)):
        x = _closedFormSolvent(bMatrix, branch)
    else:
        identity = np.eye(2)
        x = (_solventEigenvalue(first, branch, snap) * (bMatrix - second * identity)
             - _solventEigenvalue(second, branch, snap) * (bMatrix - first * identity)) / gap

    return mrdivide(x, jpBlock)

def secondOrder (cTail: np.ndarray, jpBlock: np.ndarray, charge: float) -> np.ndarray:
    """
    Returns D of C_n ~ C / nu + D / nu^2 (nu = n + l + 1) for a Coulomb tail.

    Expanding the fraction one order further gives the Stein equation
    D - X D Y = Z e^2 C^2 with X = C J' and Y = J' C. A channel pair with
    x_i x_j = 1 (the neutral Feshbach-Villars channel) makes it singular; there the
    minimum-norm solution leaves D at zero.

    :param cTail: leading coefficient C
    :param jpBlock: asymptotic off-diagonal coefficient J'
    :param charge: Z e^2 of the Coulomb term
    """

    cTail = np.asarray(cTail, dtype=complex)
    if charge == 0:
        return np.zeros_like(cTail)

    jpBlock = np.asarray(jpBlock, dtype=complex)
    dim = cTail.shape[0]
    x = cTail @ jpBlock
    y = jpBlock @ cTail
    # row-major vec(X D Y) = (X kron Y^T) vec(D)
    system = np.eye(dim * dim) - np.kron(x, y.T)
    rhs = charge * (cTail @ cTail).ravel()
    solution = np.linalg.lstsq(system, rhs, rcond=STEIN_RCOND)[0]
    return solution.reshape(dim, dim)

def physicalBranch (jBlock: np.ndarray, jpBlock: np.ndarray, target: complex) -> int:
    """
    Returns the branch whose X has an eigenvalue closest to `target`
    (the outgoing factor of the energy).

    :param jBlock: asymptotic diagonal coefficient J
    :param jpBlock: asymptotic off-diagonal coefficient J'
    :param target: outgoing factor x(k)
    """

    jpBlock = np.asarray(jpBlock, dtype=complex)
    eigenvalues = {branch: np.atleast_1d(_eigenvalues2x2(solveTail(jBlock, jpBlock, branch) @ jpBlock)) for branch in (1, -1)}

    def distance (branch: int) -> float:
        # channels shared by both branches (the neutral one) do not tell them apart
        own, other = eigenvalues[branch], eigenvalues[-branch]
        differing = [x for x in own if np.min(np.abs(other - x)) > BRANCH_MATCH * (1.0 + abs(x))]
        return float(np.min(np.abs(np.asarray(differing or own) - target)))

    return 1 if distance(1) <= distance(-1) else -1

def tailBlocks (consts: PhysicalConstants, eps: complex, b: float, relativistic: bool = True, charge: float = 0.0) -> TailBlocks:
    """
    Returns the tail solved on the physical branch at energy eps. Below threshold
    at a real energy the tail is real and is returned without imaginary parts.

    :param consts: physical constants
    :param eps: energy measured from the rest energy
    :param b: CS scale parameter
    :param relativistic: path selector
    :param charge: Z e^2 of the Coulomb term, for the 1 / nu^2 correction
    """

    jBlock, jpBlock = asymptoticFromRest(consts, eps, b, relativistic)
    try:
        k2 = wavenumberSquared(consts, eps, relativistic)
        target = outgoingFactor(k2, b)
        branch = physicalBranch(jBlock, jpBlock, target)
        cTail = solveTail(jBlock, jpBlock, branch)
    except SingularTailException as e:
        raise SingularTailException(eps) from e

    cNext = secondOrder(cTail, jpBlock, charge)
    if complex(eps).imag == 0 and k2.real < 0:
        cTail = cTail.real.astype(complex)
        cNext = cNext.real.astype(complex)

    logging.debug(f'Tail at eps = {eps}: branch {branch:+d}, outgoing factor {target:.6g}.')
    return TailBlocks(j_block=jBlock, jp_block=jpBlock, c_tail=cTail, branch=branch, c_next=cNext)
