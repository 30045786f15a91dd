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

import logging
import numpy as np
import pandas as pd
import scipy.stats


def reblock(df, nblocks):
    """
    Reblock df into nblocks new blocks (nblocks is the length of the returned data)

    Probe samples are independent, so reblocking does not change the error bar
    in expectation; it is useful to check that the error bar is stable.

    :param df: data to reblock, samples along axis 0
    :type df: pandas DataFrame or numpy array
    :param nblocks: number of resulting blocks
    :type nblocks: int
    :return: reblocked data
    :rtype: same as input df
    """
    if isinstance(df, pd.DataFrame):
        return pd.DataFrame({col: _reblock(df[col].values, nblocks) for col in df.columns})
    elif isinstance(df, np.ndarray):
        return np.stack(_reblock(df, nblocks), axis=0)
    else:
        raise TypeError("type {0} not recognized by reblock".format(type(df)))


def _reblock(array, nblocks):
    return [v.mean(axis=0) for v in np.array_split(array, nblocks, axis=0)]


def mean_and_error(samples):
    """
    Sample mean and standard error (sample standard deviation / sqrt(count)).

    :param samples: (nsamples, ...) array
    :return: (mean, standard error); the error is 0 when there is a single sample
    """
    samples = np.asarray(samples)
    mean = np.mean(samples, axis=0)
    if samples.shape[0] < 2:
        logging.warning("standard error is undefined for a single sample; reporting 0")
        return mean, np.zeros_like(np.real(mean))
    if np.iscomplexobj(samples):
        err = np.hypot(
            scipy.stats.sem(samples.real, axis=0), scipy.stats.sem(samples.imag, axis=0)
        )
    else:
        err = scipy.stats.sem(samples, axis=0)
    return mean, err
