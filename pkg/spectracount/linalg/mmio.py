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
import numpy as np
import scipy.io
import scipy.sparse
from spectracount.errors import MatrixFileNotFoundError, MatrixParseError
from spectracount.linalg.hermitian import build_hermitian


def read_matrix_market(fname):
    """Read a dense array from a Matrix Market file.

    Coordinate files (general, symmetric or hermitian) and dense array files are
    accepted; symmetric and hermitian storage is expanded by scipy.io.mmread.

    :parameter str fname: path to the .mtx file
    :returns: n x m complex array
    """
    if not os.path.isfile(fname):
        raise MatrixFileNotFoundError(f"matrix file {fname} does not exist")
    try:
        mat = scipy.io.mmread(fname)
    except (ValueError, TypeError, IndexError, RuntimeError) as e:
        raise MatrixParseError(f"could not parse {fname} as Matrix Market: {e}") from e
    if scipy.sparse.issparse(mat):
        mat = mat.toarray()
    return np.asarray(mat, dtype=complex)


def load_hermitian(fname, **hermitian_kws):
    """read_matrix_market() followed by build_hermitian()."""
    return build_hermitian(read_matrix_market(fname), **hermitian_kws)
