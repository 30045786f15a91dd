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
Statevector simulation of the counting readout.

Registers: b_N counting qubits (most significant) and b_n system qubits, so the
basis index is counting_index * 2**b_n + system_index. Every operation returns a
new StateVector and leaves its input untouched.
"""

import collections
import numpy as np
import scipy.fft
from spectracount.errors import (
    ZeroVectorError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidProbabilityError,
    InvalidRequestError,
)
from spectracount.quantum.circuit import (
    qft_dense,
    qft_gates,
    apply_gates,
    shift_gates,
    circuit_to_json,
)
from spectracount.method.augmented import permutation_array, permutation_as_cnots

QuadratureSpectrum = collections.namedtuple("QuadratureSpectrum", ["t", "norms"])


class StateVector:
    def __init__(self, amplitudes, b_N, b_n, norm_tol=1e-12):
        amplitudes = np.array(amplitudes, dtype=complex)
        if amplitudes.shape != (2 ** (b_N + b_n),):
            raise DimensionMismatchError(
                f"{amplitudes.shape} amplitudes do not fit {b_N}+{b_n} qubits"
            )
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1) > norm_tol:
            raise InvalidRequestError(f"state norm is {norm}, expected 1")
        self.amplitudes = amplitudes
        self.amplitudes.flags.writeable = False
        self.b_N = b_N
        self.b_n = b_n
        self.nqubits = b_N + b_n

    def blocks(self):
        """Amplitudes as an (N, n) array: row j is the system register given counting j."""
        return self.amplitudes.reshape(2**self.b_N, 2**self.b_n)

    def __repr__(self):
        return f"StateVector(counting={self.b_N}, system={self.b_n})"


def prepare_state(vec, b_N, b_n):
    """|vec> = vec / ||vec|| on b_N counting and b_n system qubits."""
    vec = np.asarray(vec, dtype=complex)
    norm = np.linalg.norm(vec)
    if norm == 0:
        raise ZeroVectorError("cannot prepare a state from the zero vector")
    return StateVector(vec / norm, b_N, b_n)


def apply_counting_gates(state, gates):
    """Apply a counting-register gate list (qubit 0 = counting LSB) to the full state."""
    amps = apply_gates(state.amplitudes, shift_gates(gates, state.b_n), state.nqubits)
    return StateVector(amps, state.b_N, state.b_n)


def apply_block_permutation(state, use_gates=False):
    """Relabel the counting register by Pi, taking |y> to |y'>.

    use_gates=True runs the CNOT circuit instead of indexing the blocks; both give
    the same state.
    """
    if use_gates:
        return apply_counting_gates(state, permutation_as_cnots(state.b_N))
    blocks = state.blocks()[permutation_array(2**state.b_N)]
    return StateVector(blocks.reshape(-1), state.b_N, state.b_n)


def apply_qft_counting(state, dense_max_qubits=10):
    """(U_QFT (x) I)|state>. Block j of the result is t_j / ||y|| for state |y'>."""
    blocks = state.blocks()
    if state.b_N == 0:
        return state
    if state.b_N <= dense_max_qubits:
        new = qft_dense(state.b_N) @ blocks
    else:
        new = scipy.fft.ifft(blocks, axis=0, norm="ortho")
    return StateVector(new.reshape(-1), state.b_N, state.b_n)


def counting_probability(state, j):
    """Probability of observing j on the counting register."""
    if not 0 <= j < 2**state.b_N:
        raise IndexOutOfRangeError(f"counting outcome {j} outside 0..{2**state.b_N - 1}")
    return float(np.sum(np.abs(state.blocks()[j]) ** 2))


def counting_probabilities(state):
    return np.sum(np.abs(state.blocks()) ** 2, axis=1)


def postselect_counting(state, j):
    """System-register state left after observing j on the counting register."""
    block = state.blocks()[j]
    norm = np.linalg.norm(block)
    if norm == 0:
        raise ZeroVectorError(f"counting outcome {j} has zero probability")
    return StateVector(block / norm, 0, state.b_n)


def quadrature_spectrum(xs):
    """t_j = N**-0.5 sum_k exp(2 pi i j k / N) x_k for an (N, n) array of solutions."""
    t = scipy.fft.ifft(np.asarray(xs), axis=0, norm="ortho")
    return QuadratureSpectrum(t, np.linalg.norm(t, axis=1))


def recover_s_norm_sq(p, y_norm_sq, rho, N, prob_tol=1e-12):
    """||s||^2 = rho^2 p ||y||^2 / N from the probability p of counting outcome 1."""
    if not -prob_tol <= p <= 1 + prob_tol:
        raise InvalidProbabilityError(f"p must lie in [0, 1], got {p}")
    if y_norm_sq < 0:
        raise InvalidRequestError(f"||y||^2 must be nonnegative, got {y_norm_sq}")
    return rho**2 * min(max(p, 0.0), 1.0) * y_norm_sq / N


def sample_counts(state, shots, seed=None):
    """Multinomial draw of `shots` measurements of every qubit.

    :returns: integer array of length 2**nqubits, counts per basis outcome
    """
    if shots < 1:
        raise InvalidRequestError(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(seed)
    probs = np.abs(state.amplitudes) ** 2
    probs /= probs.sum()
    return rng.multinomial(shots, probs)


def counting_counts(counts, b_N, b_n):
    """Marginal counts of the counting register from full-register counts."""
    return np.asarray(counts).reshape(2**b_N, 2**b_n).sum(axis=1)


def counting_circuit(b_N):
    """Counting-register circuit: the Pi permutation followed by the QFT."""
    return permutation_as_cnots(b_N) + qft_gates(b_N)


def export_counting_circuit(fname, b_N):
    return circuit_to_json(counting_circuit(b_N), fname)
