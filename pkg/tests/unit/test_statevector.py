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

import json
import numpy as np
import pytest
from spectracount.linalg.hermitian import build_hermitian
from spectracount.contour import trapezoid_circle
from spectracount.method.trace_estimator import apply_filtered_projector
from spectracount.method.augmented import build_augmented, solve_augmented, reorder_to_yprime
from spectracount.quantum.statevector import (
    StateVector,
    prepare_state,
    apply_block_permutation,
    apply_qft_counting,
    counting_probability,
    counting_probabilities,
    postselect_counting,
    quadrature_spectrum,
    recover_s_norm_sq,
    sample_counts,
    counting_counts,
    export_counting_circuit,
)
from spectracount.errors import (
    ZeroVectorError,
    IndexOutOfRangeError,
    InvalidProbabilityError,
    DimensionMismatchError,
)


def run_pipeline(A, q, v):
    """Return (||s||^2 from the readout, ||s||^2 from the classical sum, final state)."""
    layout = solve_augmented(build_augmented(A, q, v))
    b_n = A.dim.bit_length() - 1
    state = prepare_state(layout.y, q.b_N, b_n)
    psi = apply_qft_counting(apply_block_permutation(state))
    p = counting_probability(psi, 1)
    quantum = recover_s_norm_sq(p, np.linalg.norm(layout.y) ** 2, q.rho, q.N)
    s, _ = apply_filtered_projector(A, q, v)
    return quantum, np.linalg.norm(s) ** 2, psi


def test_prepare_state():
    state = prepare_state([1, 0, 0, 0], 1, 1)
    assert np.array_equal(state.amplitudes, [1, 0, 0, 0])
    state = prepare_state([3, 4, 0, 0], 1, 1)
    assert np.allclose(state.amplitudes, [0.6, 0.8, 0, 0], atol=1e-15)
    with pytest.raises(ZeroVectorError):
        prepare_state(np.zeros(4), 1, 1)
    with pytest.raises(DimensionMismatchError):
        prepare_state(np.ones(6), 1, 2)
    with pytest.raises(ValueError):
        state.amplitudes[0] = 0


def test_block_permutation(hermitian_factory):
    A = hermitian_factory(4, 0)
    q = trapezoid_circle(0.0, 0.5, 3)
    layout = solve_augmented(build_augmented(A, q, np.ones(4)))
    state = prepare_state(layout.y, 3, 2)
    permuted = apply_block_permutation(state)
    assert np.allclose(permuted.amplitudes, prepare_state(reorder_to_yprime(layout), 3, 2).amplitudes, atol=1e-15)
    assert np.allclose(apply_block_permutation(permuted).amplitudes, state.amplitudes, atol=1e-15)
    assert np.allclose(apply_block_permutation(state, use_gates=True).amplitudes, permuted.amplitudes, atol=1e-15)

    single = prepare_state(np.arange(1, 5), 1, 1)
    assert np.array_equal(apply_block_permutation(single).amplitudes, single.amplitudes)


@pytest.mark.parametrize("b_N", [1, 2, 3, 4])
@pytest.mark.parametrize("b_n", [0, 1, 2, 3])
def test_permutation_on_basis_states(b_N, b_n):
    N, n = 2**b_N, 2**b_n
    for index in range(N * n):
        e = np.zeros(N * n)
        e[index] = 1
        state = StateVector(e, b_N, b_n)
        fast = apply_block_permutation(state)
        gates = apply_block_permutation(state, use_gates=True)
        assert np.array_equal(fast.amplitudes, gates.amplitudes)


def test_qft_counting_constant_sequence():
    # n = 1, all x_k equal: everything lands on j = 0
    state = prepare_state(np.ones(8), 3, 0)
    psi = apply_qft_counting(state)
    assert abs(counting_probability(psi, 0) - 1) < 1e-12
    assert counting_probability(psi, 1) < 1e-24


def test_qft_fft_path_matches_dense(hermitian_factory):
    rng = np.random.default_rng(0)
    amps = rng.normal(size=64) + 1j * rng.normal(size=64)
    state = prepare_state(amps, 4, 2)
    dense = apply_qft_counting(state)
    fft = apply_qft_counting(state, dense_max_qubits=0)
    assert np.max(np.abs(dense.amplitudes - fft.amplitudes)) < 1e-12


def test_counting_probability_errors():
    state = prepare_state(np.ones(8), 2, 1)
    with pytest.raises(IndexOutOfRangeError):
        counting_probability(state, 4)
    with pytest.raises(IndexOutOfRangeError):
        counting_probability(state, -1)


def test_recover_s_norm_sq():
    assert recover_s_norm_sq(0.0, 3.0, 0.5, 8) == 0
    assert recover_s_norm_sq(0.25, 4.0, 0.5, 8) == 2 * recover_s_norm_sq(0.25, 2.0, 0.5, 8)
    with pytest.raises(InvalidProbabilityError):
        recover_s_norm_sq(1.5, 1.0, 1.0, 4)
    with pytest.raises(InvalidProbabilityError):
        recover_s_norm_sq(-0.1, 1.0, 1.0, 4)


def test_scalar_pipeline():
    gamma, rho = 0.3, 0.5
    A = build_hermitian([[gamma]])
    q = trapezoid_circle(gamma, rho, 3)
    quantum, classical, _ = run_pipeline(A, q, np.array([1.0]))
    assert abs(quantum - classical) <= 1e-10 * classical


def test_pipeline_identity(hermitian_factory):
    rng = np.random.default_rng(42)
    for seed in range(50):
        A = hermitian_factory(8, seed, real=seed % 2 == 0)
        q = trapezoid_circle(rng.uniform(-0.5, 0.5), rng.uniform(0.2, 1.0), 4)
        v = rng.choice([-1.0, 1.0], size=8)
        quantum, classical, psi = run_pipeline(A, q, v)
        assert abs(quantum - classical) <= 1e-10 * classical, f"instance {seed}"
        assert abs(np.sum(counting_probabilities(psi)) - 1) < 1e-12


@pytest.mark.parametrize("n", [2, 4, 8])
@pytest.mark.parametrize("b_N", [2, 3, 4])
def test_pipeline_identity_sizes(hermitian_factory, n, b_N):
    A = hermitian_factory(n, n + b_N)
    q = trapezoid_circle(0.0, 0.6, b_N)
    v = np.random.default_rng(n).normal(size=n)
    quantum, classical, _ = run_pipeline(A, q, v)
    assert abs(quantum - classical) <= 1e-10 * classical


def test_phase_irrelevance(hermitian_factory):
    A = hermitian_factory(4, 9)
    q = trapezoid_circle(0.0, 0.5, 3)
    layout = solve_augmented(build_augmented(A, q, np.ones(4)))
    yprime = reorder_to_yprime(layout)
    p = counting_probability(apply_qft_counting(prepare_state(yprime, 3, 2)), 1)
    for phase in [np.exp(0.3j), np.exp(np.pi * 1j / q.N), -1]:
        rotated = counting_probability(apply_qft_counting(prepare_state(phase * yprime, 3, 2)), 1)
        assert abs(rotated - p) < 1e-14


def test_parseval_and_readout(hermitian_factory):
    A = hermitian_factory(4, 2)
    q = trapezoid_circle(0.1, 0.5, 3)
    v = np.array([1.0, -1.0, 1.0, 1.0])
    s, xs = apply_filtered_projector(A, q, v)
    spectrum = quadrature_spectrum(xs)
    y_norm_sq = np.sum(np.abs(xs) ** 2)
    assert abs(np.sum(spectrum.norms**2) - y_norm_sq) <= 1e-10 * y_norm_sq
    # s = rho exp(i pi / N) / sqrt(N) * t_1
    expected = q.rho * np.exp(1j * np.pi / q.N) / np.sqrt(q.N) * spectrum.t[1]
    assert np.allclose(s, expected, atol=1e-12)

    _, _, psi = run_pipeline(A, q, v)
    layout = solve_augmented(build_augmented(A, q, v))
    assert np.allclose(psi.blocks(), spectrum.t / np.linalg.norm(layout.y), atol=1e-12)
    post = postselect_counting(psi, 1)
    overlap = abs(np.vdot(post.amplitudes, s / np.linalg.norm(s)))
    assert abs(overlap - 1) < 1e-12


def test_sample_counts():
    state = prepare_state([0, 0, 1, 0], 1, 1)
    counts = sample_counts(state, 100, seed=0)
    assert counts[2] == 100 and counts.sum() == 100

    rng = np.random.default_rng(3)
    state = prepare_state(rng.normal(size=16) + 1j * rng.normal(size=16), 2, 2)
    shots = 100000
    counts = sample_counts(state, shots, seed=1)
    probs = np.abs(state.amplitudes) ** 2
    freq = counts / shots
    assert np.all(np.abs(freq - probs) <= 4 * np.sqrt(probs * (1 - probs) / shots) + 1e-12)
    assert np.array_equal(counts, sample_counts(state, shots, seed=1))
    marginal = counting_counts(counts, 2, 2)
    assert marginal.sum() == shots and len(marginal) == 4


def test_export_counting_circuit(tmp_path):
    fname = tmp_path / "counting.json"
    export_counting_circuit(fname, 4)
    doc = json.loads(fname.read_text())
    assert doc[:3] == [{"gate": "cnot", "control": 3, "target": t} for t in range(3)]
    assert doc[3] == {"gate": "h", "qubit": 3}
    assert doc[4] == {"gate": "cp", "control": 2, "target": 3, "angle_over_pi": 0.5}
