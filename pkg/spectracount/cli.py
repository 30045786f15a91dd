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

"""spectra-count: eigenvalue-density histogram of a Matrix Market file."""

import argparse
import logging
import sys
import numpy as np
from spectracount.errors import InputError, NumericalError, HistogramIOError
from spectracount.method.density import MODES, ESTIMATORS, FORMATS
from spectracount.method.trace_estimator import DISTRIBUTIONS
import spectracount.recipes


def _interval(text):
    try:
        a, b = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b got {text!r}")
    return a, b


def _hhl_constant(text):
    if text == "auto":
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number or 'auto', got {text!r}")


def _attach_interval(argv):
    """Rewrite ["--interval", "-1,1"] as ["--interval=-1,1"].

    argparse treats a separate value starting with '-' as an option unless it
    parses as a plain number, which "a,b" never does.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--interval" and i + 1 < len(argv):
            out.append(f"--interval={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spectra-count",
        description="Estimate the eigenvalue density of a Hermitian matrix over an interval.",
    )
    parser.add_argument("--matrix", required=True, help="Matrix Market file")
    parser.add_argument("--interval", required=True, type=_interval, help="a,b")
    parser.add_argument("--bins", type=int, default=1)
    parser.add_argument("--quad-qubits", type=int, default=6, dest="b_N",
                        help="log2 of the number of quadrature nodes per bin")
    parser.add_argument("--probes", type=int, default=100)
    parser.add_argument("--mode", choices=MODES, default="classical-stochastic")
    parser.add_argument("--estimator", choices=ESTIMATORS, default="nu")
    parser.add_argument("--distribution", choices=DISTRIBUTIONS, default="rademacher")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", required=True, help="output file")
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--shots", type=int, default=None,
                        help="quantum-sim: measurements per probe instead of exact amplitudes")
    parser.add_argument("--hhl-constant", type=_hhl_constant, default=None,
                        help="quantum-sim: HHL rotation constant, a number or 'auto'")
    parser.add_argument("--timing", action="store_true", help="write wall time into the output")
    parser.add_argument("--verbose", action="store_true")
    return parser


def main(argv=None):
    """Run the CLI. Exit codes: 0 success, 1 input error, 2 numerical failure."""
    try:
        args = build_parser().parse_args(_attach_interval(argv))
    except SystemExit as e:  # argparse exits with 2 on bad usage
        return 0 if e.code in (0, None) else 1
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        spectracount.recipes.DENSITY(
            args.matrix,
            args.out,
            args.interval,
            format=args.format,
            verbose=args.verbose,
            bins=args.bins,
            b_N=args.b_N,
            probes=args.probes,
            mode=args.mode,
            estimator=args.estimator,
            seed=args.seed,
            distribution=args.distribution,
            shots=args.shots,
            hhl_constant=args.hhl_constant,
            include_timing=args.timing,
        )
    except (InputError, HistogramIOError) as e:
        logging.error(f"{type(e).__name__}: {e}")
        return 1
    except (NumericalError, np.linalg.LinAlgError) as e:
        logging.error(f"{type(e).__name__}: {e}")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
