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


def setup_hdf(f, row, attr):
    """
    Create one growable dataset per key of `row` and store `attr` as attributes.

    :parameter f: open h5py File or Group
    :parameter dict row: one representative row, {name: array}; sets shapes and dtypes
    :parameter dict attr: scalar or string attributes; None values are stored as ''
    """
    for k, it in row.items():
        itnp = np.asarray(it)
        f.create_dataset(
            k, (0, *itnp.shape), maxshape=(None, *itnp.shape), dtype=itnp.dtype
        )
    for k, it in attr.items():
        f.attrs[k] = "" if it is None else it


def append_hdf(f, row):
    """Append `row` along the first axis, creating missing datasets on the fly."""
    for k, it in row.items():
        if k not in f.keys():
            setup_hdf(f, {k: it}, {})
        dset = f[k]
        dset.resize((dset.shape[0] + 1, *dset.shape[1:]))
        dset[-1, ...] = it


def read_attrs(f):
    """Attributes back as plain Python values; '' becomes None."""
    ret = {}
    for k, it in f.attrs.items():
        if isinstance(it, bytes):
            it = it.decode()
        if isinstance(it, np.generic):
            it = it.item()
        ret[k] = None if isinstance(it, str) and it == "" else it
    return ret


if __name__ == "__main__":
    with h5py.File("testfile.hdf5", "a") as f:
        row = {"nu": np.arange(1.0, 5.0)}
        setup_hdf(f, row, {"mode": "classical-stochastic"})
        append_hdf(f, row)
        append_hdf(f, row)
        print(np.array(f["nu"]), read_attrs(f))
