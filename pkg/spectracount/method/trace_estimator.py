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
import logging
import numpy as np
import scipy.linalg
from spectracount.errors import DimensionTooLargeError, InvalidRequestError
from spectracount.contour import filter_value
from spectracount.linalg.hermitian import (
    factorize_shifted,
    solve_factorized,
    shifted_matrix,
)
import spectracount.reblock as reblock


ProbeVector = collections.namedtuple(
    "ProbeVector", ["values", "distribution", "seed", "stream"]
)

DISTRIBUTIONS = ("rademacher", "gaussian")


def probe_rng(seed, stream):
    """Generator for probe number `stream`; independent of how probes are scheduled."""
    return np.random.default_rng(np.random.SeedSequence(int(seed), spawn_key=(int(stream),)))


def sample_probe(n, seed, stream, distribution="rademacher"):
    """Draw one real probe vector with zero mean and identity covariance.

    :parameter int n: dimension
    :parameter int seed: root seed
    :parameter int stream: probe index; (seed, stream) fixes the vector
    :parameter str distribution: 'rademacher' (i.i.d. +-1) or 'gaussian'
    :rtype: ProbeVector
    """
    if distribution not in DISTRIBUTIONS:
        raise InvalidRequestError(
            f"unknown probe distribution {distribution}; expected one of {DISTRIBUTIONS}"
        )
    rng = probe_rng(seed, stream)
    if distribution == "rademacher":
        values = rng.integers(0, 2, size=n) * 2.0 - 1.0
    else:
        values = rng.standard_normal(n)
    return ProbeVector(values, distribution, seed, stream)


def probe_block(n, seed, streams, distribution="rademacher"):
    """Probes for several streams as the columns of an (n, len(streams)) array."""
    return np.stack(
        [sample_probe(n, seed, s, distribution).values for s in streams], axis=1
    )


def _as_values(v):
    return v.values if isinstance(v, ProbeVector) else np.asarray(v)


def resolvent_solutions(A, q, v, conjugate_shortcut=True):
    """Solve (z_k I - A) x_k = v for every node.

    Only nodes k < N/2 are factorized. Their partners N-1-k come either from the
    elementwise conjugate (A and v real) or from an adjoint solve with the same
    factors, because z_{N-1-k} I - A = (z_k I - A)^H.

    :parameter v: (n,) or (n, nprobe)
    :returns: xs, (N, n) or (N, n, nprobe) complex
    """
    v = _as_values(v)
    N = q.N
    xs = np.zeros((N, *v.shape), dtype=complex)
    real_pair = A.is_real and not np.iscomplexobj(v)
    for k in range(N // 2):
        factors = factorize_shifted(A, q.nodes[k])
        xs[k] = solve_factorized(factors, v)
        if not conjugate_shortcut:
            xs[N - 1 - k] = solve_factorized(factorize_shifted(A, q.nodes[N - 1 - k]), v)
        elif real_pair:
            xs[N - 1 - k] = xs[k].conj()
        else:
            xs[N - 1 - k] = solve_factorized(factors, v, adjoint=True)
    return xs


def apply_filtered_projector(A, q, v, conjugate_shortcut=True):
    """s = P_Gamma v = sum_k w_k x_k with x_k = (z_k I - A)^{-1} v.

    :parameter A: HermitianOperator
    :parameter q: ContourQuadrature
    :parameter v: ProbeVector, (n,) vector, or (n, nprobe) batch of real probes
    :returns: (s, xs) with s shaped like v and xs (N, *v.shape)
    """
    xs = resolvent_solutions(A, q, v, conjugate_shortcut)
    s = np.einsum("k,k...->...", q.weights, xs)
    return s, xs


class EstimatorResult:
    """Stochastic estimates of mu = Tr(P) and nu = Tr(P^2) from per-probe samples."""

    def __init__(self, mu_samples, nu_samples):
        self.mu_samples = np.asarray(mu_samples)  # nprobe complex, v^H s
        self.nu_samples = np.asarray(nu_samples)  # nprobe real, ||s||^2
        self.sample_count = len(self.nu_samples)
        self.mu_estimate, self.mu_stderr = reblock.mean_and_error(self.mu_samples)
        self.nu_estimate, self.nu_stderr = reblock.mean_and_error(self.nu_samples)

    def count(self, estimator="nu"):
        """(estimate, standard error) of the eigenvalue count; mu reports Re(mu)."""
        if estimator == "mu":
            return float(np.real(self.mu_estimate)), float(self.mu_stderr)
        elif estimator == "nu":
            return float(self.nu_estimate), float(self.nu_stderr)
        raise InvalidRequestError(f"unknown estimator {estimator}; expected mu or nu")

    def __repr__(self):
        return (
            f"EstimatorResult(mu={self.mu_estimate:.6g}+-{self.mu_stderr:.2g}, "
            f"nu={self.nu_estimate:.6g}+-{self.nu_stderr:.2g}, samples={self.sample_count})"
        )


def probe_samples_worker(A, q, seed, streams, distribution, batch_size=256):
    """
    v^H s and ||s||^2 for the probes in `streams`.

    Probes are solved in batches of batch_size right-hand sides; each quadrature
    pair is factorized once per batch.

    :returns: (mu_samples, nu_samples), each of length len(streams)
    """
    mu, nu = [], []
    for start in range(0, len(streams), batch_size):
        block = streams[start : start + batch_size]
        V = probe_block(A.dim, seed, block, distribution)  # n x nprobe
        S, _ = apply_filtered_projector(A, q, V)
        mu.append(np.einsum("ip,ip->p", V.conj(), S))
        nu.append(np.sum(np.abs(S) ** 2, axis=0))
    if len(mu) == 0:
        return np.zeros(0, dtype=complex), np.zeros(0)
    return np.concatenate(mu), np.concatenate(nu)


def map_probes(worker, args, streams, client=None, npartitions=None, **kwargs):
    """Run worker(*args, streams_chunk, **kwargs) over chunks of probe streams.

    With a client (anything with submit() returning futures) the chunks run in
    parallel; results are concatenated in stream order either way.
    """
    streams = np.asarray(streams)
    if client is None:
        return worker(*args, streams, **kwargs)
    chunks = np.array_split(streams, npartitions if npartitions else 1)
    runs = [client.submit(worker, *args, chunk, **kwargs) for chunk in chunks]
    allresults = list(zip(*[r.result() for r in runs]))
    return tuple(np.concatenate(part) for part in allresults)


def _run_estimator(
    A,
    q,
    probe_count,
    seed=0,
    distribution="rademacher",
    batch_size=256,
    client=None,
    npartitions=None,
):
    if probe_count < 1:
        raise InvalidRequestError(f"probe_count must be >= 1, got {probe_count}")
    streams = np.arange(probe_count)
    mu, nu = map_probes(
        probe_samples_worker,
        (A, q, seed),
        streams,
        client,
        npartitions,
        distribution=distribution,
        batch_size=batch_size,
    )
    result = EstimatorResult(mu, nu)
    imag = np.max(np.abs(np.imag(result.mu_samples)))
    if imag > 1e-8 * max(np.max(np.abs(result.mu_samples)), 1.0):
        logging.warning(f"v^H s has an imaginary part of {imag:.3e}; P is not Hermitian?")
    return result


def estimate_mu(A, q, probe_count, seed=0, **estimator_kws):
    """Estimate mu = Tr(P_Gamma) as the mean of v^H s over probe_count probes.

    Probe i is drawn from stream i of `seed`, so the result does not depend on
    batching or on the parallel partitioning.

    :parameter A: HermitianOperator
    :parameter q: ContourQuadrature
    :parameter int probe_count: number of probes, >= 1
    :parameter int seed: root seed
    :parameter estimator_kws: distribution, batch_size, client, npartitions
    :rtype: EstimatorResult (both mu and nu are filled in)
    """
    return _run_estimator(A, q, probe_count, seed, **estimator_kws)


def estimate_nu(A, q, probe_count, seed=0, **estimator_kws):
    """Estimate nu = Tr(P_Gamma^2) as the mean of ||s||^2.

    Both estimates come out of the same probe solves, so this runs the same
    estimator as estimate_mu; read result.nu. Same arguments as estimate_mu.

    :rtype: EstimatorResult (both mu and nu are filled in)
    """
    return _run_estimator(A, q, probe_count, seed, **estimator_kws)


def exact_mu(eigs, q):
    """sum_j f_N(lambda_j) from an EigenDecomposition."""
    return complex(np.sum(filter_value(q, eigs.eigenvalues)))


def exact_nu(eigs, q):
    """sum_j f_N(lambda_j)^2 from an EigenDecomposition."""
    return float(np.sum(np.real(filter_value(q, eigs.eigenvalues) ** 2)))


def filtered_projector_matrix(A, q, max_dim=128):
    """P_Gamma = sum_k w_k (z_k I - A)^{-1} formed explicitly. Test oracle only."""
    if A.dim > max_dim:
        raise DimensionTooLargeError(
            f"explicit projector is limited to dim <= {max_dim}, got {A.dim}"
        )
    identity = np.eye(A.dim, dtype=complex)
    P = np.zeros((A.dim, A.dim), dtype=complex)
    for z, w in zip(q.nodes, q.weights):
        P += w * scipy.linalg.solve(shifted_matrix(A, z), identity)
    return P


def exact_trace_direct(A, q, max_dim=128):
    """Tr(P_Gamma) from the explicitly formed projector."""
    return complex(np.trace(filtered_projector_matrix(A, q, max_dim)))
