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
from spectracount.reblock import reblock, mean_and_error


def test_reblock_shapes():
    data = np.arange(100.0).reshape(50, 2)
    blocked = reblock(data, 5)
    assert blocked.shape == (5, 2)
    assert np.allclose(blocked.mean(axis=0), data.mean(axis=0))
    df = pd.DataFrame({"nu": np.arange(10.0)})
    assert list(reblock(df, 2)["nu"]) == [2.0, 7.0]


def test_mean_and_error():
    rng = np.random.default_rng(0)
    samples = rng.normal(size=200)
    mean, err = mean_and_error(samples)
    assert mean == np.mean(samples)
    assert abs(err - np.std(samples, ddof=1) / np.sqrt(200)) < 1e-14

    complex_samples = samples + 1j * rng.normal(size=200)
    mean, err = mean_and_error(complex_samples)
    assert abs(err - np.hypot(scipy.stats.sem(complex_samples.real), scipy.stats.sem(complex_samples.imag))) < 1e-14


def test_single_sample(caplog):
    with caplog.at_level(logging.WARNING):
        mean, err = mean_and_error(np.array([0.7]))
    assert mean == 0.7 and err == 0
    assert "single sample" in caplog.text
