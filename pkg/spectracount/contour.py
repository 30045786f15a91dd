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
Trapezoidal quadrature of the resolvent on a circle and the filter it induces.

For a circle with center :math:`\gamma` and radius :math:`\rho`, with
:math:`\theta_k = 2\pi(k + 1/2)/N`,

.. math:: z_k = \gamma + \rho e^{i\theta_k}, \qquad w_k = \frac{\rho}{N} e^{i\theta_k}

and the filter :math:`f_N(\lambda) = \sum_k w_k / (z_k - \lambda) = 1/(1 + u^N)`
with :math:`u = (\lambda - \gamma)/\rho`.
"""

import numpy as np
from spectracount.errors import (
    InvalidRadiusError,
    NodeCountOutOfRangeError,
    EmptyIntervalError,
)


class ContourQuadrature:
    """Nodes and weights of the N-point trapezoidal rule on a circle.

    Construct with trapezoid_circle().
    """

    def __init__(self, gamma, rho, nodes, weights):
        self.gamma = gamma
        self.rho = rho
        self.nodes = nodes  # N complex
        self.weights = weights  # N complex
        self.N = len(nodes)
        self.b_N = int(self.N).bit_length() - 1
        for a in (self.nodes, self.weights):
            a.flags.writeable = False

    def __repr__(self):
        return f"ContourQuadrature(gamma={self.gamma}, rho={self.rho}, N={self.N})"


def trapezoid_circle(gamma, rho, b_N):
    """Trapezoidal rule with N = 2**b_N points on the circle |z - gamma| = rho.

    The half-step offset keeps every node off the real axis. The second half of
    the nodes is set to the conjugates of the first half, so the pairing
    z_k = conj(z_{N-k-1}), w_k = conj(w_{N-k-1}) holds exactly in floating point.

    :parameter float gamma: center on the real axis
    :parameter float rho: radius, > 0
    :parameter int b_N: log2 of the node count, 1 <= b_N <= 20
    :rtype: ContourQuadrature
    """
    if not rho > 0:
        raise InvalidRadiusError(f"radius must be positive, got {rho}")
    if int(b_N) != b_N or not 1 <= b_N <= 20:
        raise NodeCountOutOfRangeError(f"b_N must be an integer in [1, 20], got {b_N}")
    N = 2 ** int(b_N)
    theta = 2 * np.pi * (np.arange(N // 2) + 0.5) / N
    phase = np.exp(1j * theta)
    phase = np.concatenate([phase, phase[::-1].conj()])
    nodes = gamma + rho * phase
    weights = (rho / N) * phase
    return ContourQuadrature(float(gamma), float(rho), nodes, weights)


def interval_to_circle(a, b):
    """Circle crossing the real axis at a and b: (gamma, rho) = ((a+b)/2, (b-a)/2)."""
    if not a < b:
        raise EmptyIntervalError(f"interval ({a}, {b}) is empty")
    return (a + b) / 2, (b - a) / 2


def filter_value(q, lam):
    """f_N(lam) = sum_k w_k / (z_k - lam), summed directly over the nodes.

    :parameter q: ContourQuadrature
    :parameter lam: real scalar or array
    :returns: complex scalar or array of the same shape as lam
    """
    lam = np.asarray(lam, dtype=float)
    terms = q.weights / (q.nodes - lam[..., np.newaxis])
    return terms.sum(axis=-1)


def filter_closed_form(q, lam):
    """Analytic value 1/(1 + u**N) of the trapezoidal filter, u = (lam - gamma)/rho.

    For |u| > 1 the equivalent u**-N / (u**-N + 1) is evaluated so large N does
    not overflow.
    """
    u = (np.asarray(lam, dtype=float) - q.gamma) / q.rho
    outside = np.abs(u) > 1
    with np.errstate(divide="ignore", over="ignore"):
        inner = 1.0 / (1.0 + np.where(outside, 0.0, u) ** q.N)
        recip = np.where(outside, 1.0 / np.where(outside, u, 1.0), 0.0) ** q.N
        outer = recip / (recip + 1.0)
    return np.where(outside, outer, inner)[()]


def indicator_g(lam, a, b):
    """1 where a < lam < b (open interval), else 0."""
    if not a < b:
        raise EmptyIntervalError(f"interval ({a}, {b}) is empty")
    lam = np.asarray(lam)
    return ((lam > a) & (lam < b)).astype(int)[()]
