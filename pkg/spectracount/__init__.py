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
Eigenvalue counts and eigenvalue densities of Hermitian matrices from a
contour-integral band-pass filter and a stochastic trace estimator.
Includes a statevector simulation of the quantum readout of the same estimator
(augmented resolvent system, CNOT permutation, QFT on the counting register)."""

name = "spectracount"

__version__ = "0.1.0"
