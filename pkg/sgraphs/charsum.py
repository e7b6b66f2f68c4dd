# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Exact sums of p-th roots of unity.

A CycInt is an element of Z[zeta_p] in the power basis 1, zeta, ...,
zeta^(p-2); zeta^(p-1) never appears, having been rewritten as
-(1 + zeta + ... + zeta^(p-2)). Two CycInt are equal iff their coefficient
tuples are. Floating point only enters through the numeric embeddings,
which are used for ordering and reporting.
"""

import functools
import logging
import math

import numpy as np

from . import executors
from .errors import InvalidSpec, InvariantViolation, NotReal, SizeExceeded

logger = logging.getLogger(__name__)


DEFAULT_MQ_MAX_ORDER = 343


@functools.lru_cache(maxsize=None)
def _unit_circle(p):
    angles = [2 * math.pi * j / p for j in range(p)]
    return tuple(math.cos(t) for t in angles), tuple(math.sin(t) for t in angles)


class CycInt(object):
    """An element of Z[zeta_p].

    Attributes:
        p (int): the prime
        coeffs (int tuple): p - 1 coefficients on 1, zeta, ..., zeta^(p-2)
    """

    __slots__ = ('p', 'coeffs')

    def __init__(self, p, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != p - 1:
            raise ValueError("Z[zeta_%d] needs %d coefficients, got %d" % (p, p - 1, len(coeffs)))
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, p, counts):
        """sum(counts[j] * zeta^j for j < p), reduced to canonical form."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError("expected %d exponent counts, got %d" % (p, len(counts)))
        top = counts[p - 1]
        return cls(p, [c - top for c in counts[:p - 1]])

    @classmethod
    def integer(cls, p, n):
        return cls(p, [n] + [0] * (p - 2))

    @classmethod
    def zero(cls, p):
        return cls.integer(p, 0)

    def _full(self):
        return list(self.coeffs) + [0]

    def _check(self, other):
        if isinstance(other, int):
            return CycInt.integer(self.p, other)
        if not isinstance(other, CycInt) or other.p != self.p:
            raise TypeError("cannot combine %r with %r" % (self, other))
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return CycInt(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CycInt(self.p, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.p, [a * other for a in self.coeffs])
        other = self._check(other)
        p = self.p
        product = [0] * p
        mine = self._full()
        theirs = [(j, b) for j, b in enumerate(other._full()) if b]
        for i, a in enumerate(mine):
            if a:
                for j, b in theirs:
                    product[(i + j) % p] += a * b
        return CycInt.from_exponents(p, product)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under zeta -> zeta^(-1)."""
        p = self.p
        full = self._full()
        image = [0] * p
        for j, a in enumerate(full):
            image[(-j) % p] += a
        return CycInt.from_exponents(p, image)

    def is_real(self):
        return self == self.conjugate()

    def is_integer(self):
        return not any(self.coeffs[1:])

    def numeric(self):
        """Complex embedding zeta -> exp(2*pi*i/p), compensated summation."""
        cos, sin = _unit_circle(self.p)
        re = math.fsum(a * cos[j] for j, a in enumerate(self.coeffs))
        im = math.fsum(a * sin[j] for j, a in enumerate(self.coeffs))
        return complex(re, im)

    def real_embed(self):
        if not self.is_real():
            raise NotReal("%r is not real" % (self,))
        cos, _sin = _unit_circle(self.p)
        return math.fsum(a * cos[j] for j, a in enumerate(self.coeffs))

    def sort_key(self):
        """Descending numeric order, ties by coefficient tuple."""
        return (-self.numeric().real, self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.integer(self.p, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return 'CycInt(%d, %r)' % (self.p, self.coeffs)


def zeta_pow(p, beta):
    """zeta_p ** beta in canonical form, 0 <= beta < p."""
    if not 0 <= beta < p:
        raise ValueError("exponent %d out of range [0, %d)" % (beta, p))
    counts = [0] * p
    counts[beta] = 1
    return CycInt.from_exponents(p, counts)


def is_real(v):
    return v.is_real()


def real_embed(v):
    return v.real_embed()


def format_decimal(x):
    return '%.12g' % x


class Poly(object):
    """A univariate polynomial over a FiniteField.

    Attributes:
        field (FiniteField): coefficient field
        coeffs (int tuple): canonical encodings of the coefficients,
            ascending degree, trailing zeros trimmed
    """

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        for c in coeffs:
            if not 0 <= c < field.q:
                raise InvalidSpec("coefficient %d is not an element of F_%d" % (c, field.q))
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > field.q:
            raise InvalidSpec("degree %d exceeds q - 1 = %d" % (len(coeffs) - 1, field.q - 1))
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, field, n, coeff=1):
        """coeff * X^n, with n folded onto [1, q-1] when it exceeds q - 1.

        The fold keeps the polynomial function unchanged, since
        x^q == x for every x in F_q.
        """
        n = reduced_exponent(n, field.q)
        return cls(field, [0] * n + [coeff])

    @classmethod
    def from_terms(cls, field, terms):
        """Sum of coeff * X^n over (n, coeff) pairs, folding high exponents."""
        coeffs = [0] * field.q
        for n, coeff in terms:
            n = reduced_exponent(n, field.q)
            coeffs[n] = field.add(coeffs[n], coeff)
        return cls(field, coeffs)

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, j):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def is_odd(self):
        """Whether f(-X) == -f(X) as polynomials.

        In characteristic 2 every polynomial qualifies.
        """
        if self.field.p == 2:
            return True
        return not any(self.coeffs[0::2])

    def __call__(self, x):
        result = 0
        for c in reversed(self.coeffs):
            result = self.field.add(self.field.mul(result, x), c)
        return result

    def evaluate_array(self, xs):
        """Horner evaluation on a numpy array of encodings."""
        xs = np.asarray(xs, dtype=np.int64)
        result = np.zeros(xs.shape, dtype=np.int64)
        for c in reversed(self.coeffs):
            result = self.field.add_array(self.field.mul_array(result, xs), c)
        return result

    def __add__(self, other):
        field = self.field
        length = max(len(self.coeffs), len(other.coeffs))
        return Poly(field, [field.add(self.coefficient(j), other.coefficient(j)) for j in range(length)])

    def scale(self, c):
        return Poly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return 'Poly(0)'
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(('%d' % c) if j == 0 else ('%s*X^%d' % (c, j)))
        return 'Poly(%s)' % ' + '.join(terms)

    def as_list(self):
        return list(self.coeffs)


def reduced_exponent(n, q):
    if n <= q - 1:
        return n
    return (n - 1) % (q - 1) + 1


class ExpSumResult(object):
    """An exponential sum, exact and embedded.

    Attributes:
        value (CycInt): the exact sum
        numeric (complex): its embedding
        terms (int): number of summed roots of unity
    """

    __slots__ = ('value', 'numeric', 'terms')

    def __init__(self, value, terms):
        self.value = value
        self.numeric = value.numeric()
        self.terms = terms

    def as_dict(self):
        return {
            'coeffs': list(self.value.coeffs),
            're': format_decimal(self.numeric.real),
            'im': format_decimal(self.numeric.imag),
        }

    def __repr__(self):
        return 'ExpSumResult(%r, %r)' % (self.value, self.numeric)


def _histogram(field, exponents):
    return np.bincount(np.asarray(exponents).ravel(), minlength=field.p)


def exp_sum(f):
    """epsilon_f = sum over x in F_q of zeta_p ** Tr(f(x)), by enumeration."""
    field = f.field
    values = f.evaluate_array(np.arange(field.q))
    counts = _histogram(field, field.trace_array(values))
    return ExpSumResult(CycInt.from_exponents(field.p, counts), field.q)


class WeilReport(object):
    __slots__ = ('degree', 'magnitude', 'bound', 'holds', 'applicable')

    def __init__(self, degree, magnitude, bound, holds, applicable):
        self.degree = degree
        self.magnitude = magnitude
        self.bound = bound
        self.holds = holds
        self.applicable = applicable

    def as_dict(self):
        return {slot: getattr(self, slot) for slot in self.__slots__}

    def __repr__(self):
        return 'WeilReport(n=%d, |eps|=%.6f, bound=%.6f, holds=%s, applicable=%s)' % (
            self.degree, self.magnitude, self.bound, self.holds, self.applicable)


def weil_check(f, tolerance=1e-9):
    """Check |epsilon_f| <= (n - 1) * sqrt(q) for n = deg f.

    The bound only applies when n >= 1 and gcd(n, q) == 1; outside that
    range it is reported without being enforced.
    """
    field = f.field
    n = f.degree
    magnitude = abs(exp_sum(f).numeric)
    bound = max(n - 1, 0) * math.sqrt(field.q)
    applicable = n >= 1 and math.gcd(n, field.q) == 1
    holds = magnitude <= bound + tolerance
    if applicable and not holds:
        raise InvariantViolation("Weil bound fails for %r: %.12g > %.12g" % (f, magnitude, bound))
    return WeilReport(n, magnitude, bound, holds, applicable)


class MqResult(object):
    """M_q = max over a, b != 0 of epsilon_{aX^3 + bX}.

    Attributes:
        q (int): field order
        value (CycInt): exact maximum
        numeric (float): its real embedding
        argmax ((int, int)): first (a, b) in encoding order attaining it
        table (dict): (a, b) => CycInt, for every pair
    """

    __slots__ = ('q', 'value', 'numeric', 'argmax', 'table')

    def __init__(self, q, value, argmax, table):
        self.q = q
        self.value = value
        self.numeric = value.real_embed()
        self.argmax = argmax
        self.table = table

    def as_dict(self):
        return {
            'q': self.q,
            'M_q': format_decimal(self.numeric),
            'coeffs': list(self.value.coeffs),
            'argmax': list(self.argmax),
        }

    def __repr__(self):
        return 'MqResult(q=%d, M_q=%.9f, argmax=%r)' % (self.q, self.numeric, self.argmax)


def _mq_chunk(field, a_start, a_stop):
    """epsilon_{aX^3 + bX} coefficient rows for a in [a_start, a_stop), all b != 0."""
    q, p = field.q, field.p
    xs = np.arange(q, dtype=np.int64)
    bs = np.arange(1, q, dtype=np.int64)
    cubes = field.mul_array(field.mul_array(xs, xs), xs)
    linear = field.trace_array(field.mul_array(bs[:, None], xs[None, :]))
    offsets = (np.arange(q - 1, dtype=np.int64) * p)[:, None]

    rows = []
    for a in range(a_start, a_stop):
        cubic = field.trace_array(field.mul_array(a, cubes))
        exponents = (linear + cubic[None, :]) % p
        counts = np.bincount((exponents + offsets).ravel(), minlength=(q - 1) * p)
        counts = counts.reshape(q - 1, p)
        reduced = counts[:, :p - 1] - counts[:, p - 1:p]
        for b, row in zip(bs, reduced):
            rows.append(((a, int(b)), tuple(int(c) for c in row)))
    return rows


def compute_mq(field, max_order=DEFAULT_MQ_MAX_ORDER, executor=None):
    """Brute-force M_q over all (q - 1)**2 pairs (a, b).

    Raises:
        SizeExceeded: q is larger than max_order
        InvariantViolation: some epsilon_{aX^3 + bX} is not real
    """
    q = field.q
    if q > max_order:
        raise SizeExceeded("M_q field order", q, max_order)
    if q == 2:
        logger.info("M_2 is computed outside the odd-q regime of the cubic theorems")
    executor = executor or executors.SerialExecutor()
    tasks = [
        executors.Task('mq[%d:%d]' % (start + 1, stop + 1), _mq_chunk, (field, start + 1, stop + 1))
        for start, stop in executors.split_range(q - 1, executor.jobs * 4)
    ]

    table = {}
    for chunk in executor.map_tasks(tasks):
        for pair, coeffs in chunk:
            table[pair] = CycInt(field.p, coeffs)

    best = None
    best_value = None
    best_numeric = None
    for pair in sorted(table):
        value = table[pair]
        if not value.is_real():
            raise InvariantViolation("epsilon_{%d X^3 + %d X} = %r is not real" % (pair[0], pair[1], value))
        if value == best_value:
            continue
        numeric = value.real_embed()
        if best is None or numeric > best_numeric:
            best, best_value, best_numeric = pair, value, numeric

    logger.info("M_%d = %.9f at (a, b) = %r", q, best_numeric, best)
    return MqResult(q, best_value, best, table)
