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

import os
os.environ["MKL_NUM_THREADS"] = "1"
os.environ["NUMEXPR_NUM_THREADS"] = "1"
os.environ["OMP_NUM_THREADS"] = "1"
import pytest
import numpy as np
import scipy.io
import scipy.stats
import spectracount.api as spc

THIS_DIR = os.path.dirname(os.path.abspath(__file__))


"""
Matrices reused across the tests. All of them are small enough that the
eigenvalue oracles are cheap.
"""


def random_hermitian(n, seed, real=False, spectrum=None):
    """Hermitian matrix with the given spectrum (default: uniform in [-1, 1])."""
    rng = np.random.default_rng(seed)
    if spectrum is None:
        spectrum = rng.uniform(-1, 1, n)
    if real:
        U = scipy.stats.ortho_group.rvs(n, random_state=rng) if n > 1 else np.ones((1, 1))
    else:
        U = scipy.stats.unitary_group.rvs(n, random_state=rng) if n > 1 else np.ones((1, 1))
    return spc.build_hermitian(U @ np.diag(spectrum) @ U.conj().T)


@pytest.fixture(scope="module")
def hermitian_factory():
    return random_hermitian


# Eigenvalues in (0, 1) at least 0.05 away from the edges of 4 equal bins.
TWELVE_EIGENVALUES = [0.05, 0.1, 0.15, 0.2, 0.3, 0.35, 0.45, 0.55, 0.6, 0.65, 0.8, 0.9]
TWELVE_COUNTS = [4, 3, 3, 2]


@pytest.fixture(scope="module")
def twelve_eigenvalue_diag():
    return np.diag(TWELVE_EIGENVALUES), TWELVE_COUNTS


def write_mtx(fname, mat, symmetry="general"):
    scipy.io.mmwrite(str(fname), mat, symmetry=symmetry)
    return fname


@pytest.fixture
def mtx_writer(tmp_path):
    def writer(mat, name="A.mtx", symmetry="general"):
        return str(write_mtx(tmp_path / name, mat, symmetry))

    return writer
