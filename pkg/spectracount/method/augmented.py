# MIT License
#
# Copyright (c) 2024 The spectracount Developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

r"""
Half-size Hermitian augmented system for the N shifted systems.

With :math:`A_k = z_k I - A` and :math:`A' = A_0 \oplus \dots \oplus A_{N/2-1}`,

.. math:: C = \begin{pmatrix} O & A'^H \\ A' & O \end{pmatrix}, \qquad C y = v' = (v, \dots, v)

has the solution :math:`y = (x_0, \dots, x_{N/2-1}, x_{N-1}, \dots, x_{N/2})`,
because :math:`A_k^H = z_{N-1-k} I - A`. The off-diagonal blocks are placed so
that this block order comes out; the transposed placement would reverse the
top half.
"""

import collections
import numpy as np
import scipy.linalg
from spectracount.errors import DimensionTooLargeError, IndexOutOfRangeError
from spectracount.linalg.hermitian import (
    shifted_matrix,
    factorize_shifted,
    solve_factorized,
)
from spectracount.quantum.circuit import cnot

SolutionLayout = collections.namedtuple("SolutionLayout", ["y", "block_order", "n", "N"])


class AugmentedSystem:
    """Blocks A_k (k < N/2), stacked right-hand side v' and the operator C.

    C is only materialized as a dense matrix when n*N <= materialize_limit;
    otherwise it is applied block by block.
    """

    def __init__(self, A, q, v, materialize_limit=4096):
        self.A = A
        self.q = q
        self.v = np.asarray(v)  # n
        self.n = A.dim
        self.N = q.N
        self.dim = self.n * self.N
        self.materialize_limit = materialize_limit
        self.blocks = [shifted_matrix(A, z) for z in q.nodes[: self.N // 2]]
        self.rhs = np.tile(self.v, self.N)  # n*N

    def matrix(self):
        """Dense C, for small instances."""
        if self.dim > self.materialize_limit:
            raise DimensionTooLargeError(
                f"C has dimension {self.dim} > {self.materialize_limit}; use apply()"
            )
        half = self.dim // 2
        C = np.zeros((self.dim, self.dim), dtype=complex)
        for p, block in enumerate(self.blocks):
            lo = p * self.n
            C[lo : lo + self.n, half + lo : half + lo + self.n] = block.conj().T
            C[half + lo : half + lo + self.n, lo : lo + self.n] = block
        return C

    def apply(self, y):
        """C y without forming C."""
        half = self.dim // 2
        top = y[:half].reshape(-1, self.n)
        bottom = y[half:].reshape(-1, self.n)
        upper = np.stack([b.conj().T @ x for b, x in zip(self.blocks, bottom)])
        lower = np.stack([b @ x for b, x in zip(self.blocks, top)])
        return np.concatenate([upper.reshape(-1), lower.reshape(-1)])

    def min_singular_value(self):
        """min |eigenvalue of C|, the smallest singular value over the blocks."""
        return min(np.min(scipy.linalg.svdvals(b)) for b in self.blocks)


def build_augmented(A, q, v, materialize_limit=4096, max_dim=2**22):
    """
    :parameter A: HermitianOperator, n x n
    :parameter q: ContourQuadrature with N nodes
    :parameter v: real n-vector (ProbeVector values)
    :parameter int materialize_limit: largest n*N for which C may be formed densely
    :parameter int max_dim: largest n*N handled at all
    :rtype: AugmentedSystem
    """
    if A.dim * q.N > max_dim:
        raise DimensionTooLargeError(f"n*N = {A.dim * q.N} exceeds {max_dim}")
    return AugmentedSystem(A, q, v, materialize_limit)


def solve_augmented(sys):
    """Solve C y = v' one block pair at a time; C is never factorized as a whole.

    Block p < N/2 of y is x_p; block N/2 + p is x_{N-1-p}, obtained from the
    same factors by an adjoint solve.

    :rtype: SolutionLayout
    """
    half = sys.N // 2
    y = np.zeros((sys.N, sys.n), dtype=complex)
    for p, z in enumerate(sys.q.nodes[:half]):
        factors = factorize_shifted(sys.A, z)
        y[p] = solve_factorized(factors, sys.v)
        y[half + p] = solve_factorized(factors, sys.v, adjoint=True)
    block_order = np.array([permutation_pi(sys.N, p) for p in range(sys.N)])
    return SolutionLayout(y.reshape(-1), block_order, sys.n, sys.N)


def _check_power_of_two(N):
    if N < 1 or N & (N - 1):
        raise IndexOutOfRangeError(f"N must be a power of 2, got {N}")


def permutation_pi(N, k):
    """k for k < N/2, 3N/2 - k - 1 otherwise. An involution on 0..N-1."""
    _check_power_of_two(N)
    if not 0 <= k < N:
        raise IndexOutOfRangeError(f"index {k} outside 0..{N - 1}")
    return k if k < N // 2 else 3 * N // 2 - k - 1


def permutation_array(N):
    return np.array([permutation_pi(N, k) for k in range(N)])


def permutation_as_cnots(b_N):
    """Pi on the counting register: CNOTs from the most significant qubit onto
    every lower qubit, i.e. flip the lower bits when the top bit is set."""
    return [cnot(b_N - 1, target) for target in range(b_N - 1)]


def reorder_to_yprime(layout):
    """y' = (x_0, ..., x_{N-1}), i.e. (Pi (x) I_n) applied to the blocks of y."""
    blocks = layout.y.reshape(layout.N, layout.n)
    return blocks[permutation_array(layout.N)].reshape(-1)
