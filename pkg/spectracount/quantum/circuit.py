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
Gate lists and their action on statevectors.

Qubit q is bit q of the basis index (qubit 0 is the least significant bit).
Gate kinds: 'h' (Hadamard), 'cp' (controlled phase), 'swap', 'cnot', and 'cswap'
(Fredkin, used by the swap test). For controlled gates the control comes first
in `qubits`.
"""

import collections
import json
import numpy as np
from spectracount.errors import IndexOutOfRangeError, InvalidRequestError

GateOp = collections.namedtuple("GateOp", ["kind", "qubits", "angle"], defaults=[None])

_NQUBITS = {"h": 1, "cp": 2, "swap": 2, "cnot": 2, "cswap": 3}
_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def hadamard(q):
    return GateOp("h", (q,))


def cnot(control, target):
    return GateOp("cnot", (control, target))


def cphase(control, target, angle):
    return GateOp("cp", (control, target), angle)


def swap(q0, q1):
    return GateOp("swap", (q0, q1))


def cswap(control, q0, q1):
    return GateOp("cswap", (control, q0, q1))


def check_gate(gate, nqubits):
    if gate.kind not in _NQUBITS:
        raise InvalidRequestError(f"unknown gate kind {gate.kind}")
    if len(gate.qubits) != _NQUBITS[gate.kind]:
        raise InvalidRequestError(f"{gate.kind} acts on {_NQUBITS[gate.kind]} qubits, got {gate.qubits}")
    if len(set(gate.qubits)) != len(gate.qubits):
        raise InvalidRequestError(f"{gate.kind} qubits must be distinct, got {gate.qubits}")
    for q in gate.qubits:
        if not 0 <= q < nqubits:
            raise IndexOutOfRangeError(f"qubit {q} outside a {nqubits}-qubit register")


def _index(nqubits, assignment):
    """Tensor index fixing the given {qubit: bit} values, slices elsewhere."""
    idx = [slice(None)] * nqubits
    for q, bit in assignment.items():
        idx[nqubits - 1 - q] = bit
    return tuple(idx)


def apply_gate(amplitudes, gate, nqubits):
    """Return the amplitudes after one gate. The input array is not modified."""
    check_gate(gate, nqubits)
    state = np.asarray(amplitudes, dtype=complex).reshape([2] * nqubits)
    if gate.kind == "h":
        axis = nqubits - 1 - gate.qubits[0]
        new = np.tensordot(_HADAMARD, state, axes=([1], [axis]))
        return np.moveaxis(new, 0, axis).reshape(-1)

    new = state.copy()

    def sel(*bits):
        return _index(nqubits, dict(zip(gate.qubits, bits)))

    if gate.kind == "cnot":
        new[sel(1, 0)], new[sel(1, 1)] = state[sel(1, 1)], state[sel(1, 0)]
    elif gate.kind == "cp":
        new[sel(1, 1)] *= np.exp(1j * gate.angle)
    elif gate.kind == "swap":
        new[sel(0, 1)], new[sel(1, 0)] = state[sel(1, 0)], state[sel(0, 1)]
    elif gate.kind == "cswap":
        new[sel(1, 0, 1)], new[sel(1, 1, 0)] = state[sel(1, 1, 0)], state[sel(1, 0, 1)]
    return new.reshape(-1)


def apply_gates(amplitudes, gates, nqubits):
    for gate in gates:
        amplitudes = apply_gate(amplitudes, gate, nqubits)
    return amplitudes


def shift_gates(gates, offset):
    """Relabel qubits q -> q + offset, e.g. to place a counting-register circuit
    above a system register of `offset` qubits."""
    return [g._replace(qubits=tuple(q + offset for q in g.qubits)) for g in gates]


def to_unitary(gates, nqubits, max_qubits=12):
    """Dense unitary of a gate list, column k = circuit applied to |k>."""
    if nqubits > max_qubits:
        raise InvalidRequestError(f"to_unitary supports at most {max_qubits} qubits")
    dim = 2**nqubits
    U = np.eye(dim, dtype=complex)
    for k in range(dim):
        U[:, k] = apply_gates(U[:, k], gates, nqubits)
    return U


def qft_gates(b_N):
    """Gate list for the QFT with entries exp(+2 pi i j k / N)/sqrt(N).

    Hadamard on each qubit from the most significant down, controlled phases
    pi/2**m from the lower qubits, then the qubit-reversal swaps.
    """
    gates = []
    for target in reversed(range(b_N)):
        gates.append(hadamard(target))
        for control in reversed(range(target)):
            gates.append(cphase(control, target, np.pi / 2 ** (target - control)))
    for q in range(b_N // 2):
        gates.append(swap(q, b_N - 1 - q))
    return gates


def qft_dense(b_N, max_qubits=10):
    """Dense QFT matrix, entry (j, k) = exp(2 pi i j k / N) / sqrt(N)."""
    if not 1 <= b_N <= max_qubits:
        raise InvalidRequestError(f"qft_dense needs 1 <= b_N <= {max_qubits}, got {b_N}")
    N = 2**b_N
    jk = np.outer(np.arange(N), np.arange(N)) % N
    return np.exp(2j * np.pi * jk / N) / np.sqrt(N)


def gate_to_dict(gate):
    if gate.kind == "h":
        return {"gate": "h", "qubit": int(gate.qubits[0])}
    if gate.kind in ("cnot", "cp"):
        d = {"gate": gate.kind, "control": int(gate.qubits[0]), "target": int(gate.qubits[1])}
        if gate.kind == "cp":
            d["angle_over_pi"] = gate.angle / np.pi
        return d
    if gate.kind == "swap":
        return {"gate": "swap", "qubits": [int(q) for q in gate.qubits]}
    return {
        "gate": "cswap",
        "control": int(gate.qubits[0]),
        "targets": [int(q) for q in gate.qubits[1:]],
    }


def gate_from_dict(d):
    kind = d["gate"]
    if kind == "h":
        return hadamard(d["qubit"])
    if kind == "cnot":
        return cnot(d["control"], d["target"])
    if kind == "cp":
        return cphase(d["control"], d["target"], d["angle_over_pi"] * np.pi)
    if kind == "swap":
        return swap(*d["qubits"])
    if kind == "cswap":
        return cswap(d["control"], *d["targets"])
    raise InvalidRequestError(f"unknown gate {kind}")


def circuit_to_json(gates, fname=None):
    """JSON gate list, e.g. [{"gate": "cnot", "control": 3, "target": 0}, ...].

    Written to fname when given; the JSON text is returned either way.
    """
    text = json.dumps([gate_to_dict(g) for g in gates], indent=1)
    if fname is not None:
        with open(fname, "w") as f:
            f.write(text)
    return text


def circuit_from_json(text):
    return [gate_from_dict(d) for d in json.loads(text)]
