# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Exceptions raised by sgraphs components.

Each class carries the process exit code the command-line front end uses
when the error escapes.
"""


class SGraphError(Exception):
    exit_code = 1


class InvariantViolation(SGraphError):
    """An exact-arithmetic invariant failed; this is a bug, not bad input."""
    exit_code = 1


class InvalidSpec(SGraphError):
    exit_code = 2


class ConfigError(InvalidSpec):
    pass


class NonPrime(InvalidSpec):
    pass


class FieldMismatch(InvalidSpec):
    pass


class DivisionByZero(InvalidSpec, ZeroDivisionError):
    pass


class OddnessViolation(InvalidSpec):
    pass


class SpecMismatch(InvalidSpec):
    pass


class NotReal(InvalidSpec, ValueError):
    pass


class NotBipartite(InvalidSpec):
    pass


class Disconnected(InvalidSpec):
    pass


class SizeExceeded(SGraphError):
    exit_code = 3

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super(SizeExceeded, self).__init__(
            "%s %d exceeds the configured cap %d" % (what, size, cap))


class HypothesisViolated(SGraphError):
    exit_code = 4
