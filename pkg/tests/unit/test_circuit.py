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
from spectracount.quantum.circuit import (
    hadamard,
    cnot,
    cphase,
    swap,
    cswap,
    apply_gate,
    to_unitary,
    qft_gates,
    qft_dense,
    circuit_to_json,
    circuit_from_json,
)
from spectracount.errors import IndexOutOfRangeError, InvalidRequestError


def basis(k, nqubits):
    e = np.zeros(2**nqubits, dtype=complex)
    e[k] = 1
    return e


def test_bit_convention():
    # qubit 0 is the least significant bit
    assert np.array_equal(apply_gate(basis(0b01, 2), cnot(0, 1), 2), basis(0b11, 2))
    assert np.array_equal(apply_gate(basis(0b10, 2), cnot(0, 1), 2), basis(0b10, 2))
    assert np.array_equal(apply_gate(basis(0b001, 3), swap(0, 2), 3), basis(0b100, 3))
    assert np.array_equal(apply_gate(basis(0b101, 3), cswap(2, 0, 1), 3), basis(0b110, 3))
    assert np.array_equal(apply_gate(basis(0b001, 3), cswap(2, 0, 1), 3), basis(0b001, 3))
    phased = apply_gate(basis(0b11, 2), cphase(0, 1, np.pi / 2), 2)
    assert np.allclose(phased, 1j * basis(0b11, 2))
    h = apply_gate(basis(0b00, 2), hadamard(1), 2)
    assert np.allclose(h, (basis(0b00, 2) + basis(0b10, 2)) / np.sqrt(2))


def test_apply_gate_does_not_modify_input():
    state = basis(3, 2)
    apply_gate(state, cnot(1, 0), 2)
    assert np.array_equal(state, basis(3, 2))


def test_gate_checks():
    with pytest.raises(IndexOutOfRangeError):
        apply_gate(basis(0, 2), hadamard(2), 2)
    with pytest.raises(InvalidRequestError):
        apply_gate(basis(0, 2), cnot(1, 1), 2)
    with pytest.raises(InvalidRequestError):
        apply_gate(basis(0, 2), hadamard(0)._replace(kind="t"), 2)


def test_qft_single_qubit():
    assert np.allclose(qft_dense(1), np.array([[1, 1], [1, -1]]) / np.sqrt(2), atol=1e-15)


@pytest.mark.parametrize("b_N", [1, 2, 3, 4, 5])
def test_qft_gates_match_dense(b_N):
    F = qft_dense(b_N)
    U = to_unitary(qft_gates(b_N), b_N)
    assert np.max(np.abs(U - F)) <= 1e-12
    assert np.max(np.abs(F @ F.conj().T - np.eye(2**b_N))) <= 1e-12
    assert np.max(np.abs(U @ U.conj().T - np.eye(2**b_N))) <= 1e-12


def test_qft_dense_range():
    with pytest.raises(InvalidRequestError):
        qft_dense(0)
    with pytest.raises(InvalidRequestError):
        qft_dense(11)


def test_json_export(tmp_path):
    gates = [cnot(3, 0), hadamard(3), cphase(2, 3, np.pi / 2), swap(0, 3), cswap(4, 0, 1)]
    fname = tmp_path / "circuit.json"
    text = circuit_to_json(gates, fname)
    doc = json.loads(fname.read_text())
    assert doc[0] == {"gate": "cnot", "control": 3, "target": 0}
    assert doc[1] == {"gate": "h", "qubit": 3}
    assert doc[2] == {"gate": "cp", "control": 2, "target": 3, "angle_over_pi": 0.5}
    assert doc[3] == {"gate": "swap", "qubits": [0, 3]}
    assert circuit_from_json(text) == gates
