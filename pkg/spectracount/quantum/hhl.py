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

"""
Idealized HHL oracle.

No phase estimation is simulated. The oracle returns the exact normalized
solution |y> and models the success ancilla with a rotation constant c, so that
the ancilla reads 0 with probability c^2 ||y||^2 / ||b||^2. This requires
c <= min |eigenvalue of C|.
"""

import collections
import numpy as np
import scipy.linalg
from spectracount.errors import (
    InvalidConstantError,
    DimensionMismatchError,
    ZeroVectorError,
)
from spectracount.method.augmented import AugmentedSystem, solve_augmented
from spectracount.quantum.statevector import prepare_state

HHLResult = collections.namedtuple("HHLResult", ["state", "ancilla_zero_prob", "c"])


def _log2_exact(m, what):
    b = int(m).bit_length() - 1
    if m < 1 or 2**b != m:
        raise DimensionMismatchError(f"{what} = {m} is not a power of 2")
    return b


def _solve(sys, rhs):
    """(y, rhs, min |eig|, b_N, b_n) for an AugmentedSystem or a dense Hermitian matrix."""
    if isinstance(sys, AugmentedSystem):
        layout = solve_augmented(sys)
        b_N = _log2_exact(sys.N, "N")
        b_n = _log2_exact(sys.n, "n")
        return layout.y, sys.rhs, sys.min_singular_value(), b_N, b_n
    C = np.atleast_2d(np.asarray(sys, dtype=complex))
    if rhs is None:
        raise DimensionMismatchError("a dense system needs an explicit right-hand side")
    rhs = np.atleast_1d(np.asarray(rhs, dtype=complex))
    if C.shape != (len(rhs), len(rhs)):
        raise DimensionMismatchError(f"matrix {C.shape} does not match rhs of length {len(rhs)}")
    y = scipy.linalg.solve(C, rhs, assume_a="her")
    min_eig = np.min(np.abs(scipy.linalg.eigvalsh(C)))
    return y, rhs, min_eig, 0, _log2_exact(len(rhs), "system dimension")


def idealized_hhl(sys, c="auto", rhs=None, check=True, tol=1e-12):
    """
    :parameter sys: AugmentedSystem, or a dense Hermitian matrix together with `rhs`
    :parameter c: rotation constant, positive float or 'auto' for min |eigenvalue|
    :parameter rhs: right-hand side; only used for dense matrices (sys.rhs otherwise)
    :parameter bool check: compare c against min |eigenvalue|
    :returns: HHLResult(state, ancilla_zero_prob, c); the state is |y> over the
      counting and system registers
    """
    y, rhs, min_eig, b_N, b_n = _solve(sys, rhs)
    if isinstance(c, str):
        if c != "auto":
            raise InvalidConstantError(f"rotation constant must be a number or 'auto', got {c}")
        c = float(min_eig)
    if not c > 0:
        raise InvalidConstantError(f"rotation constant must be positive, got {c}")
    if check and c > min_eig * (1 + tol):
        raise InvalidConstantError(
            f"rotation constant {c} exceeds min |eigenvalue| {min_eig}"
        )
    rhs_norm_sq = np.linalg.norm(rhs) ** 2
    if rhs_norm_sq == 0:
        raise ZeroVectorError("right-hand side is zero")
    y_norm_sq = np.linalg.norm(y) ** 2
    prob = c**2 * y_norm_sq / rhs_norm_sq
    if prob > 1 + tol:
        raise InvalidConstantError(
            f"rotation constant {c} gives an ancilla probability {prob} > 1"
        )
    return HHLResult(prepare_state(y, b_N, b_n), min(prob, 1.0), c)


def recover_y_norm_sq(ancilla_zero_prob, rhs_norm_sq, c):
    """||y||^2 = P(ancilla = 0) ||b||^2 / c^2."""
    return ancilla_zero_prob * rhs_norm_sq / c**2
