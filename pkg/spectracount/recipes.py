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

import h5py
import numpy as np
import scipy.stats
import spectracount.reblock
from spectracount.method.density import (
    DensityRequest,
    estimate_density,
    write_histogram,
)
from spectracount.method.hdftools import read_attrs


def DENSITY(matrix, output, interval, format=None, verbose=False, client=None, npartitions=None, **request_kws):
    """
    Eigenvalue-density histogram of the matrix in `matrix`, written to `output`.

    :parameter matrix: Matrix Market path (or HermitianOperator / array)
    :parameter output: output path; None skips writing
    :parameter interval: (a_total, b_total)
    :parameter format: json, csv or hdf5; defaults to the DensityRequest default
    :parameter request_kws: remaining DensityRequest fields (bins, b_N, probes, mode, ...)
    :rtype: DensityHistogram
    """
    if format is not None:
        request_kws["format"] = format
    req = DensityRequest(matrix, interval, output=output, **request_kws)
    h = estimate_density(req, client=client, npartitions=npartitions, verbose=verbose)
    if output is not None:
        write_histogram(h, output, req.format)
    return h


def read_density_output(fname, reblock=None):
    """Per-bin estimates recomputed from the per-probe samples of an HDF5 histogram.

    :parameter reblock: number of blocks to average the probe samples into first
    :returns: dict with edges, meta and, per sample kind k, k and k_err arrays
    """
    ret = {"fname": fname, "reblock": reblock}
    with h5py.File(fname, "r") as f:
        ret["edges"] = f["edges"][...]
        ret["meta"] = read_attrs(f)
        if "samples" not in f:
            ret["count"] = f["counts"][...]
            ret["count_err"] = f["stderr"][...]
            return ret
        for k in f["samples"].keys():
            vals = f["samples"][k][...].T  # probes x bins
            if reblock is not None:
                vals = spectracount.reblock.reblock(vals, reblock)
            if np.iscomplexobj(vals):
                vals = vals.real
            ret[k] = np.mean(vals, axis=0)
            ret[k + "_err"] = scipy.stats.sem(vals, axis=0)
    return ret
