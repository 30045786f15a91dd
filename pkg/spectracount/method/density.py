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
Eigenvalue-density histograms over an interval split into bins.

Bins are half-open, [a_i, a_{i+1}), except the last one, which is closed at the
upper end of the interval. Stochastic modes estimate each bin with the filtered
projector of the circle through the bin edges, so an eigenvalue sitting on an
edge contributes about 1/2 to each neighbor; exact-eig mode has no such bias.
"""

import json
import logging
import os
import time
import h5py
import numpy as np
import pandas as pd
from spectracount.errors import (
    EmptyIntervalError,
    InvalidRequestError,
    PadValueInsideIntervalError,
    HistogramIOError,
)
from spectracount.contour import trapezoid_circle, interval_to_circle, indicator_g
from spectracount.linalg.hermitian import HermitianOperator, build_hermitian, eig_hermitian
from spectracount.linalg.mmio import load_hermitian
from spectracount.method import trace_estimator
from spectracount.method.augmented import build_augmented, solve_augmented
from spectracount.method.hdftools import setup_hdf, append_hdf, read_attrs
from spectracount.quantum.hhl import idealized_hhl, recover_y_norm_sq
from spectracount.quantum import statevector
import spectracount.reblock as reblock

MODES = ("exact-eig", "classical-stochastic", "quantum-sim")
ESTIMATORS = ("mu", "nu")
FORMATS = ("json", "csv", "hdf5")


class DensityRequest:
    """Everything that determines a density histogram.

    :parameter matrix: Matrix Market path, HermitianOperator or array
    :parameter interval: (a_total, b_total)
    :parameter int bins: number of equal-width bins B
    :parameter int b_N: log2 of the quadrature node count per bin
    :parameter int probes: probe vectors per bin; shared by all bins
    :parameter str mode: exact-eig, classical-stochastic or quantum-sim
    :parameter str estimator: mu or nu; quantum-sim only produces nu
    :parameter int seed: root seed, 0 <= seed < 2**64
    :parameter output: path written by recipes.DENSITY / the CLI, or None
    :parameter str format: json, csv or hdf5
    :parameter str distribution: rademacher or gaussian probes
    :parameter shots: None for exact amplitudes, else measurements per probe (quantum-sim)
    :parameter hhl_constant: None to take ||y||^2 from the direct solve, 'auto' or a
      positive float to recover it from the idealized HHL ancilla (quantum-sim)
    :parameter pad_value: diagonal value used to pad to a power of two (quantum-sim)
    :parameter bool include_timing: write wall time into output files
    """

    def __init__(
        self,
        matrix,
        interval,
        bins=1,
        b_N=6,
        probes=100,
        mode="classical-stochastic",
        estimator="nu",
        seed=0,
        output=None,
        format="json",
        distribution="rademacher",
        shots=None,
        hhl_constant=None,
        pad_value=None,
        include_timing=False,
    ):
        self.matrix = matrix
        self.interval = tuple(float(x) for x in interval)
        self.bins = bins
        self.b_N = b_N
        self.probes = probes
        self.mode = mode
        self.estimator = estimator
        self.seed = seed
        self.output = output
        self.format = format
        self.distribution = distribution
        self.shots = shots
        self.hhl_constant = hhl_constant
        self.pad_value = pad_value
        self.include_timing = include_timing
        self.validate()

    def validate(self):
        a, b = self.interval
        if not a < b:
            raise EmptyIntervalError(f"interval ({a}, {b}) is empty")
        if int(self.bins) != self.bins or self.bins < 1:
            raise InvalidRequestError(f"bins must be a positive integer, got {self.bins}")
        if self.mode not in MODES:
            raise InvalidRequestError(f"unknown mode {self.mode}; expected one of {MODES}")
        if self.estimator not in ESTIMATORS:
            raise InvalidRequestError(f"unknown estimator {self.estimator}; expected mu or nu")
        if self.mode == "quantum-sim" and self.estimator == "mu":
            raise InvalidRequestError("quantum-sim reads out ||s||^2 only; use estimator nu")
        if self.format not in FORMATS:
            raise InvalidRequestError(f"unknown format {self.format}; expected one of {FORMATS}")
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise InvalidRequestError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.distribution not in trace_estimator.DISTRIBUTIONS:
            raise InvalidRequestError(f"unknown probe distribution {self.distribution}")
        if self.mode != "exact-eig":
            if int(self.probes) != self.probes or self.probes < 1:
                raise InvalidRequestError(f"probes must be a positive integer, got {self.probes}")
            trapezoid_circle(0.0, 1.0, self.b_N)  # range check of b_N
        if self.mode != "quantum-sim" and (self.shots is not None or self.hhl_constant is not None):
            raise InvalidRequestError("shots and hhl_constant only apply to quantum-sim")
        if self.shots is not None and (int(self.shots) != self.shots or self.shots < 1):
            raise InvalidRequestError(f"shots must be a positive integer, got {self.shots}")
        if isinstance(self.hhl_constant, str) and self.hhl_constant != "auto":
            raise InvalidRequestError(f"hhl_constant must be a number or 'auto', got {self.hhl_constant}")

    def edges(self):
        return np.linspace(*self.interval, self.bins + 1)

    def meta(self):
        return {
            "mode": self.mode,
            "estimator": self.estimator,
            "b_N": int(self.b_N),
            "N": 2 ** int(self.b_N),
            "probes": None if self.mode == "exact-eig" else int(self.probes),
            "seed": int(self.seed),
            "distribution": self.distribution,
            "shots": self.shots,
            "hhl_constant": self.hhl_constant,
        }


class DensityHistogram:
    """Per-bin counts with standard errors.

    samples holds the per-probe values behind the counts, {"nu": (B, P), "mu": (B, P)},
    for the stochastic modes.
    """

    def __init__(self, edges, counts, stderr, meta=None, timing=None, samples=None):
        self.edges = np.asarray(edges, dtype=float)
        self.counts = np.asarray(counts)
        self.stderr = np.asarray(stderr, dtype=float)
        self.meta = {} if meta is None else dict(meta)
        self.timing = timing
        self.samples = {} if samples is None else samples
        if np.any(np.diff(self.edges) <= 0):
            raise InvalidRequestError("bin edges must be strictly increasing")
        if self.counts.shape != (len(self.edges) - 1,) or self.stderr.shape != self.counts.shape:
            raise InvalidRequestError(
                f"{len(self.edges)} edges need {len(self.edges) - 1} counts and errors"
            )
        if np.any(self.stderr < 0):
            raise InvalidRequestError("standard errors must be nonnegative")

    def total(self):
        return self.counts.sum()

    def __repr__(self):
        return f"DensityHistogram(bins={len(self.counts)}, mode={self.meta.get('mode')})"


def load_matrix(matrix):
    if isinstance(matrix, HermitianOperator):
        return matrix
    if isinstance(matrix, (str, os.PathLike)):
        return load_hermitian(matrix)
    return build_hermitian(matrix)


def default_pad_value(interval):
    a, b = interval
    return b + 100 * (b - a)


def pad_to_power_of_two(A, pad_value=None, interval=None):
    """Append diagonal entries pad_value until the dimension is a power of two.

    :parameter A: HermitianOperator
    :parameter float pad_value: defaults to b + 100 (b - a) for interval (a, b)
    :parameter interval: (a, b); pad_value must lie outside [a - 10 (b-a), b + 10 (b-a)]
    :returns: (HermitianOperator, pad_count)
    """
    if pad_value is None:
        if interval is None:
            raise InvalidRequestError("pad_to_power_of_two needs pad_value or interval")
        pad_value = default_pad_value(interval)
    if interval is not None:
        a, b = interval
        width = b - a
        if a - 10 * width <= pad_value <= b + 10 * width:
            raise PadValueInsideIntervalError(
                f"pad value {pad_value} lies within [{a - 10 * width}, {b + 10 * width}]"
            )
    n = A.dim
    target = 1 << (n - 1).bit_length()
    pad_count = target - n
    if pad_count == 0:
        return A, 0
    logging.warning(f"padding dimension {n} to {target} with eigenvalue {pad_value}")
    entries = np.zeros((target, target), dtype=A.entries.dtype)
    entries[:n, :n] = A.entries
    entries[np.arange(n, target), np.arange(n, target)] = pad_value
    return HermitianOperator(entries), pad_count


def count_in_bins(eigenvalues, edges):
    """Exact counts with half-open bins; the last bin also takes the upper edge."""
    eigenvalues = np.asarray(eigenvalues)
    counts = np.zeros(len(edges) - 1, dtype=int)
    for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        counts[i] = np.sum(indicator_g(eigenvalues, lo, hi)) + np.sum(eigenvalues == lo)
    counts[-1] += np.sum(eigenvalues == edges[-1])
    return counts


def quantum_probe_sample(A, q, v, hhl_constant=None, shots=None, shot_seed=None):
    """||s||^2 for one probe through the simulated circuit.

    |y> (direct solve, or the idealized HHL oracle) -> block permutation -> QFT
    -> p = P(counting = 1) -> rho^2 p ||y||^2 / N. With shots, p is a sampled
    frequency.

    :parameter A: HermitianOperator with power-of-two dimension
    :parameter q: ContourQuadrature
    :parameter v: real probe of length A.dim
    """
    sys = build_augmented(A, q, v)
    b_n = A.dim.bit_length() - 1
    if hhl_constant is None:
        layout = solve_augmented(sys)
        state = statevector.prepare_state(layout.y, q.b_N, b_n)
        y_norm_sq = np.linalg.norm(layout.y) ** 2
    else:
        hhl = idealized_hhl(sys, hhl_constant)
        state = hhl.state
        y_norm_sq = recover_y_norm_sq(
            hhl.ancilla_zero_prob, np.linalg.norm(sys.rhs) ** 2, hhl.c
        )
    state = statevector.apply_qft_counting(statevector.apply_block_permutation(state))
    if shots is None:
        p = statevector.counting_probability(state, 1)
    else:
        counts = statevector.sample_counts(state, shots, shot_seed)
        p = statevector.counting_counts(counts, q.b_N, b_n)[1] / shots
    return statevector.recover_s_norm_sq(p, y_norm_sq, q.rho, q.N)


def _shot_seed(seed, stream, bin_index):
    return np.random.SeedSequence(int(seed), spawn_key=(int(stream), int(bin_index) + 1))


def quantum_samples_worker(
    A, quads, seed, streams, distribution, n_probe, hhl_constant=None, shots=None
):
    """Per-bin ||s||^2 samples for the probes in `streams`.

    Probe components past n_probe (the padding) are zero.

    :returns: tuple with one array of len(streams) samples per quadrature
    """
    nu = np.zeros((len(quads), len(streams)))
    for p, stream in enumerate(streams):
        v = np.zeros(A.dim)
        v[:n_probe] = trace_estimator.sample_probe(n_probe, seed, stream, distribution).values
        for i, q in enumerate(quads):
            nu[i, p] = quantum_probe_sample(
                A, q, v, hhl_constant, shots, _shot_seed(seed, stream, i)
            )
    return tuple(nu)


def _bin_quadratures(req):
    edges = req.edges()
    return [
        trapezoid_circle(*interval_to_circle(lo, hi), req.b_N)
        for lo, hi in zip(edges[:-1], edges[1:])
    ]


def _exact_density(req, A, verbose):
    eigs = eig_hermitian(A)
    counts = count_in_bins(eigs.eigenvalues, req.edges())
    if verbose:
        print("eigenvalues in interval:", counts.sum())
    return counts, np.zeros(len(counts)), {}


def _classical_density(req, A, verbose, **estimator_kws):
    estimate = trace_estimator.estimate_mu if req.estimator == "mu" else trace_estimator.estimate_nu
    results = []
    for i, q in enumerate(_bin_quadratures(req)):
        result = estimate(A, q, req.probes, req.seed, distribution=req.distribution, **estimator_kws)
        if verbose:
            print(f"bin {i}", q, result, flush=True)
        results.append(result)
    counts, errs = zip(*[r.count(req.estimator) for r in results])
    samples = {
        "mu": np.stack([r.mu_samples for r in results]),
        "nu": np.stack([r.nu_samples for r in results]),
    }
    return np.array(counts), np.array(errs), samples


def _quantum_density(req, A, verbose, client=None, npartitions=None):
    n_probe = A.dim
    padded, pad_count = pad_to_power_of_two(A, req.pad_value, req.interval)
    quads = _bin_quadratures(req)
    nu = trace_estimator.map_probes(
        quantum_samples_worker,
        (padded, quads, req.seed),
        np.arange(req.probes),
        client,
        npartitions,
        distribution=req.distribution,
        n_probe=n_probe,
        hhl_constant=req.hhl_constant,
        shots=req.shots,
    )
    nu = np.stack(nu)
    counts, errs = zip(*[reblock.mean_and_error(row) for row in nu])
    if verbose:
        for i, (c, e) in enumerate(zip(counts, errs)):
            print(f"bin {i} nu={c:.6g}+-{e:.2g}", flush=True)
    return np.array(counts, dtype=float), np.array(errs, dtype=float), {"nu": nu}, pad_count


def estimate_density(req, client=None, npartitions=None, verbose=False, **estimator_kws):
    """
    Eigenvalue count per bin of req.interval.

    All bins share probe i (stream i of req.seed), so bin-to-bin fluctuations
    are correlated and the histogram shape is smoother than with fresh probes.

    :parameter req: DensityRequest
    :parameter client: object with submit(), to spread probes over workers
    :parameter int npartitions: number of probe chunks when a client is given
    :parameter bool verbose: print per-bin progress
    :parameter estimator_kws: passed to the classical estimator (batch_size)
    :rtype: DensityHistogram
    """
    start = time.perf_counter()
    A = load_matrix(req.matrix)
    meta = req.meta()
    meta["n"] = A.dim
    meta["pad_count"] = 0
    if req.mode == "exact-eig":
        counts, errs, samples = _exact_density(req, A, verbose)
    elif req.mode == "classical-stochastic":
        counts, errs, samples = _classical_density(
            req, A, verbose, client=client, npartitions=npartitions, **estimator_kws
        )
    else:
        counts, errs, samples, meta["pad_count"] = _quantum_density(
            req, A, verbose, client, npartitions
        )
    timing = time.perf_counter() - start
    logging.info(f"{req.mode} density over {req.bins} bins took {timing:.3f} s")
    if req.include_timing:
        meta["wall_time"] = timing
    return DensityHistogram(req.edges(), counts, errs, meta, timing, samples)


def _native(x):
    return np.asarray(x).tolist()


def write_histogram(h, fname, format="json"):
    """
    Write h as JSON ({"edges", "counts", "stderr", "meta"}), CSV
    (edge_lo,edge_hi,count,stderr) or HDF5 (the same arrays plus per-probe
    samples under samples/, one row per bin).
    """
    if format not in FORMATS:
        raise InvalidRequestError(f"unknown format {format}; expected one of {FORMATS}")
    try:
        if format == "json":
            doc = {
                "edges": _native(h.edges),
                "counts": _native(h.counts),
                "stderr": _native(h.stderr),
                "meta": h.meta,
            }
            with open(fname, "w") as f:
                json.dump(doc, f, indent=1)
                f.write("\n")
        elif format == "csv":
            _histogram_frame(h).to_csv(fname, index=False)
        else:
            with h5py.File(fname, "w") as f:
                setup_hdf(f, {}, {k: v for k, v in h.meta.items()})
                f["edges"] = h.edges
                f["counts"] = h.counts
                f["stderr"] = h.stderr
                if h.samples:
                    grp = f.create_group("samples")
                    nbins = len(h.counts)
                    for i in range(nbins):
                        append_hdf(grp, {k: v[i] for k, v in h.samples.items()})
    except OSError as e:
        raise HistogramIOError(f"cannot write histogram to {fname}: {e}") from e


def _histogram_frame(h):
    return pd.DataFrame(
        {
            "edge_lo": h.edges[:-1],
            "edge_hi": h.edges[1:],
            "count": h.counts,
            "stderr": h.stderr,
        }
    )


def _format_from_name(fname):
    ext = os.path.splitext(str(fname))[1].lower()
    return {".json": "json", ".csv": "csv", ".h5": "hdf5", ".hdf5": "hdf5"}.get(ext, "json")


def read_histogram(fname, format=None):
    """Read a histogram written by write_histogram; format defaults from the extension."""
    format = _format_from_name(fname) if format is None else format
    try:
        if format == "json":
            with open(fname) as f:
                doc = json.load(f)
            return DensityHistogram(doc["edges"], doc["counts"], doc["stderr"], doc["meta"])
        if format == "csv":
            df = pd.read_csv(fname)
            edges = np.append(df["edge_lo"].values, df["edge_hi"].values[-1])
            return DensityHistogram(edges, df["count"].values, df["stderr"].values)
        if format == "hdf5":
            with h5py.File(fname, "r") as f:
                samples = {}
                if "samples" in f:
                    samples = {k: f["samples"][k][...] for k in f["samples"].keys()}
                return DensityHistogram(
                    f["edges"][...], f["counts"][...], f["stderr"][...], read_attrs(f), None, samples
                )
    except (OSError, ValueError, KeyError) as e:
        raise HistogramIOError(f"cannot read histogram from {fname}: {e}") from e
    raise InvalidRequestError(f"unknown format {format}; expected one of {FORMATS}")
