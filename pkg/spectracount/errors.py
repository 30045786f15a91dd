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


class SpectraCountError(Exception):
    pass


class InputError(SpectraCountError, ValueError):
    """Bad input data or request. The CLI exits with code 1."""


class NumericalError(SpectraCountError, ArithmeticError):
    """The numerics broke down on valid input. The CLI exits with code 2."""


class HistogramIOError(SpectraCountError, OSError):
    pass


class NotSquareError(InputError):
    pass


class NotHermitianError(InputError):
    pass


class DimensionTooLargeError(InputError):
    pass


class SingularShiftError(NumericalError):
    pass


class InvalidRadiusError(InputError):
    pass


class NodeCountOutOfRangeError(InputError):
    pass


class EmptyIntervalError(InputError):
    pass


class IndexOutOfRangeError(InputError, IndexError):
    pass


class ZeroVectorError(InputError):
    pass


class InvalidProbabilityError(InputError):
    pass


class InvalidConstantError(InputError):
    pass


class DimensionMismatchError(InputError):
    pass


class PadValueInsideIntervalError(InputError):
    pass


class MatrixFileNotFoundError(InputError, FileNotFoundError):
    pass


class MatrixParseError(InputError):
    pass


class InvalidRequestError(InputError):
    pass


class NonFiniteEntriesError(InputError):
    pass
