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

from spectracount.recipes import DENSITY, read_density_output
from spectracount.linalg.hermitian import (
    HermitianOperator,
    build_hermitian,
    solve_shifted,
    eig_hermitian,
)
from spectracount.linalg.mmio import read_matrix_market, load_hermitian
from spectracount.contour import (
    trapezoid_circle,
    interval_to_circle,
    filter_value,
    filter_closed_form,
    indicator_g,
)
from spectracount.method.trace_estimator import (
    sample_probe,
    apply_filtered_projector,
    estimate_mu,
    estimate_nu,
    exact_mu,
    exact_nu,
    exact_trace_direct,
)
from spectracount.method.augmented import (
    build_augmented,
    solve_augmented,
    permutation_pi,
    permutation_as_cnots,
    reorder_to_yprime,
)
from spectracount.method.density import (
    DensityRequest,
    DensityHistogram,
    pad_to_power_of_two,
    estimate_density,
    write_histogram,
    read_histogram,
)
from spectracount.quantum.circuit import qft_dense, qft_gates, circuit_to_json
from spectracount.quantum.statevector import (
    StateVector,
    prepare_state,
    apply_block_permutation,
    apply_qft_counting,
    counting_probability,
    recover_s_norm_sq,
    sample_counts,
    export_counting_circuit,
)
from spectracount.quantum.hhl import idealized_hhl
from spectracount.quantum.swap_test import swap_test_accept_prob
from spectracount.reblock import reblock as avg_reblock
