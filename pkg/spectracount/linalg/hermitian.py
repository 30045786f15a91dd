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

import collections
import warnings
import numpy as np
import scipy.linalg
from spectracount.errors import (
    NotSquareError,
    NotHermitianError,
    NonFiniteEntriesError,
    DimensionTooLargeError,
    SingularShiftError,
)


EigenDecomposition = collections.namedtuple(
    "EigenDecomposition", ["eigenvalues", "eigenvectors"]
)


class HermitianOperator:
    """Dense complex Hermitian matrix. Build it with build_hermitian().

    The entries are stored read-only; nothing in the package modifies an operator
    after construction.
    """

    def __init__(self, entries):
        self.entries = entries  # n x n complex
        self.entries.flags.writeable = False
        self.dim = entries.shape[0]
        self.norm = np.linalg.norm(entries)  # Frobenius
        self.is_real = not np.any(entries.imag)

    def __repr__(self):
        return f"HermitianOperator(dim={self.dim}, real={self.is_real})"


def build_hermitian(entries, hermitian_tol=1e-8):
    """Validate a square matrix and return it as a HermitianOperator.

    Matrices that are Hermitian up to hermitian_tol (max absolute asymmetry per
    element) are symmetrized as (M + M^H)/2, so downstream code sees an exactly
    Hermitian matrix.

    :parameter entries: n x n array-like of (complex) values
    :parameter float hermitian_tol: largest tolerated |M_ij - conj(M_ji)|
    :returns: the validated operator
    :rtype: HermitianOperator
    """
    mat = np.array(entries, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise NotSquareError(f"expected a nonempty square matrix, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise NonFiniteEntriesError(f"{np.count_nonzero(~np.isfinite(mat))} entries are NaN or Inf")
    asymmetry = np.max(np.abs(mat - mat.conj().T))
    if asymmetry > hermitian_tol:
        raise NotHermitianError(
            f"matrix asymmetry {asymmetry:.3e} exceeds tolerance {hermitian_tol:.1e}"
        )
    return HermitianOperator((mat + mat.conj().T) / 2)


def shifted_matrix(A, z):
    """zI - A as a dense n x n array."""
    return z * np.eye(A.dim) - A.entries


def factorize_shifted(A, z, pivot_tol=1e-14):
    """LU factorization of zI - A, to be reused across right-hand sides.

    The same factors solve the conjugate-shift system through
    solve_factorized(..., adjoint=True), since conj(z)I - A = (zI - A)^H.

    :returns: (lu, piv) as returned by scipy.linalg.lu_factor
    :raises SingularShiftError: if a pivot is smaller than pivot_tol * ||A||
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(shifted_matrix(A, z), check_finite=False)
    threshold = pivot_tol * max(A.norm, np.finfo(float).tiny)
    smallest = np.min(np.abs(np.diag(lu)))
    if not smallest >= threshold:  # also catches NaN pivots
        raise SingularShiftError(
            f"shift z={z} is (numerically) an eigenvalue: pivot {smallest:.3e} < {threshold:.3e}"
        )
    return lu, piv


def solve_factorized(factors, v, adjoint=False):
    """Solve with LU factors of zI - A; adjoint=True solves (zI - A)^H x = v.

    v can be a vector (n,) or a batch of right-hand sides (n, nvec).
    """
    return scipy.linalg.lu_solve(
        factors, np.asarray(v, dtype=complex), trans=2 if adjoint else 0, check_finite=False
    )


def solve_shifted(A, z, v, pivot_tol=1e-14):
    """Solve (zI - A) x = v with a dense factorize-and-solve.

    :parameter A: HermitianOperator
    :parameter complex z: shift; must not be an eigenvalue of A
    :parameter v: (n,) or (n, nvec) right-hand side(s)
    :returns: x with the same shape as v
    """
    return solve_factorized(factorize_shifted(A, z, pivot_tol), v)


def eig_hermitian(A, max_dim=1024):
    """Full eigendecomposition of A, eigenvalues ascending.

    Used as an exact oracle (tests and exact-eig mode); the stochastic and quantum
    paths never call it.
    """
    if A.dim > max_dim:
        raise DimensionTooLargeError(
            f"eig_hermitian is limited to dim <= {max_dim}, got {A.dim}"
        )
    eigenvalues, eigenvectors = scipy.linalg.eigh(A.entries)
    return EigenDecomposition(eigenvalues, eigenvectors)
