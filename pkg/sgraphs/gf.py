# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Arithmetic in F_q = F_p[X]/(m(X)).

Elements travel as their canonical integer encoding sum(c_i * p**i), c_i the
ascending coefficients of the residue-class representative. FieldElement
wraps an encoding for callers who want operator syntax; the FiniteField
methods work on bare integers and numpy arrays of integers.
"""

import functools
import itertools
import logging

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NonPrime, SizeExceeded

logger = logging.getLogger(__name__)


DEFAULT_MAX_ORDER = 16384


def is_prime(n):
    """Trial division; n fits in 64 bits in every realistic call."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def prime_power(q):
    """Split q into (p, e) with q == p**e, or return None."""
    if q < 2:
        return None
    factors = prime_factors(q)
    if len(factors) != 1:
        return None
    p = factors[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# Polynomials over F_p, as ascending coefficient lists.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _trim([c % p for c in a])
    lead_inv = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        factor = (a[-1] * lead_inv) % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, m, p)


def _poly_powmod(base, exponent, m, p):
    result = [1]
    base = _poly_mod(list(base), m, p)
    while exponent:
        if exponent & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        exponent >>= 1
    return result


def _poly_gcd(a, b, p):
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs, p):
    """Irreducibility over F_p of the polynomial with ascending coeffs.

    Degrees 2 and 3 only need the absence of roots; above that, m is
    irreducible iff gcd(m, X^(p^i) - X) == 1 for every i <= deg(m) / 2.
    """
    m = _trim([c % p for c in coeffs])
    e = len(m) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    if e <= 3:
        for x in range(p):
            if sum(c * pow(x, i, p) for i, c in enumerate(m)) % p == 0:
                return False
        return True

    x_power = [0, 1]
    for _i in range(e // 2):
        x_power = _poly_powmod(x_power, p, m, p)
        diff = list(x_power) + [0] * max(0, 2 - len(x_power))
        diff[1] = (diff[1] - 1) % p
        if len(_poly_gcd(m, diff, p)) != 1:
            return False
    return True


def smallest_irreducible(p, e):
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Candidates are ordered by (c_0, c_1, ..., c_{e-1}), low degree first.
    """
    for low in itertools.product(range(p), repeat=e):
        candidate = list(low) + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial of degree %d over F_%d" % (e, p))


class FiniteField(object):
    """The field F_q, q = p**e.

    Attributes:
        p (int): characteristic
        e (int): extension degree
        q (int): order
        modulus (int tuple): ascending coefficients of the monic modulus,
            length e + 1; (0, 1) for prime fields, whose arithmetic is
            plain mod-p arithmetic.
    """

    __slots__ = ('p', 'e', 'q', 'modulus', '_digits', '_exp', '_log', '_trace')

    def __init__(self, p, e, modulus):
        if not is_prime(p):
            raise NonPrime("%d is not prime" % p)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise ValueError("modulus %r is not monic of degree %d" % (modulus, e))
        if e > 1 and not is_irreducible(modulus, p):
            raise ValueError("modulus %r is reducible over F_%d" % (modulus, p))

        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = modulus

        values = np.arange(self.q, dtype=np.int64)
        self._digits = np.stack([(values // p ** i) % p for i in range(e)], axis=1)
        self._exp = None
        self._log = None
        if e > 1:
            self._build_log_tables()
        self._trace = self._build_trace_table()
        for table in (self._digits, self._exp, self._log, self._trace):
            if table is not None:
                table.flags.writeable = False

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return 'FiniteField(p=%d, e=%d, modulus=%r)' % (self.p, self.e, self.modulus)

    def __getstate__(self):
        return (self.p, self.e, self.modulus)

    def __setstate__(self, state):
        self.__init__(*state)

    @property
    def is_prime_field(self):
        return self.e == 1

    # Encoding
    # --------

    def coords(self, x):
        """Coefficient tuple of x, ascending degree."""
        return tuple(int(c) for c in self._digits[x])

    def encode(self, coords):
        value = 0
        for i, c in enumerate(coords):
            value += (int(c) % self.p) * self.p ** i
        return value

    def element(self, value):
        return FieldElement(self, value)

    def elements(self):
        return [FieldElement(self, x) for x in range(self.q)]

    def from_int(self, n):
        """Image of the rational integer n in the prime subfield."""
        return n % self.p

    # Scalar arithmetic
    # -----------------

    def add(self, x, y):
        if self.e == 1:
            return (x + y) % self.p
        return self.encode(self._digits[x] + self._digits[y])

    def neg(self, x):
        if self.e == 1:
            return (-x) % self.p
        return self.encode(-self._digits[x])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def _poly_mul(self, x, y):
        prod = _poly_mulmod(list(self.coords(x)), list(self.coords(y)), list(self.modulus), self.p)
        return self.encode(prod)

    def mul(self, x, y):
        if self.e == 1:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        return int(self._exp[(self._log[x] + self._log[y]) % (self.q - 1)])

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("0 has no inverse in F_%d" % self.q)
        if self.e == 1:
            return pow(int(x), self.p - 2, self.p)
        return int(self._exp[(-self._log[x]) % (self.q - 1)])

    def pow(self, x, n):
        if n < 0:
            return self.pow(self.inv(x), -n)
        if self.e == 1:
            return pow(x, n, self.p)
        if x == 0:
            return 0 if n else 1
        return int(self._exp[(self._log[x] * n) % (self.q - 1)])

    def frobenius(self, x, i=1):
        """x**(p**i), by i-fold p-th powering."""
        for _j in range(i):
            x = self.pow(x, self.p)
        return x

    def trace(self, x):
        """Tr(x) = x + x**p + ... + x**(p**(e-1)), as an integer in [0, p)."""
        return int(self._trace[x])

    def _build_trace_table(self):
        table = np.zeros(self.q, dtype=np.int64)
        for x in range(self.q):
            total = 0
            y = x
            for _i in range(self.e):
                total = self.add(total, y)
                y = self.frobenius(y)
            assert y == x, "Frobenius does not have order %d" % self.e
            assert total < self.p, "Tr(%d) = %d is not in the prime field" % (x, total)
            table[x] = total
        return table

    def _build_log_tables(self):
        order = self.q - 1
        cofactors = [order // r for r in prime_factors(order)]

        def poly_pow(x, n):
            powers = _poly_powmod(list(self.coords(x)), n, list(self.modulus), self.p)
            return self.encode(powers)

        for g in range(2, self.q):
            if all(poly_pow(g, c) != 1 for c in cofactors):
                break
        else:
            raise AssertionError("F_%d has no primitive element" % self.q)

        exp = np.zeros(order, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        for n in range(order):
            exp[n] = x
            log[x] = n
            x = self._poly_mul(x, g)
        self._exp = exp
        self._log = log
        logger.debug("F_%d: primitive element %d", self.q, g)

    # Vectorised arithmetic on numpy arrays of encodings
    # --------------------------------------------------

    def add_array(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.e == 1:
            return (x + y) % self.p
        total = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        for i in range(self.e):
            digit = (self._digits[x, i] + self._digits[y, i]) % self.p
            total += digit * self.p ** i
        return total

    def neg_array(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.e == 1:
            return (-x) % self.p
        total = np.zeros(x.shape, dtype=np.int64)
        for i in range(self.e):
            total += ((-self._digits[x, i]) % self.p) * self.p ** i
        return total

    def mul_array(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.e == 1:
            return (x * y) % self.p
        prod = self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, prod)

    def trace_array(self, x):
        return self._trace[np.asarray(x, dtype=np.int64)]

    def scale_array(self, n, x):
        """The prime-subfield multiple n * x, elementwise."""
        return self.mul_array(self.from_int(n), x)

    def as_dict(self):
        return {'p': self.p, 'e': self.e, 'modulus': list(self.modulus)}


class FieldElement(object):
    """An element of a FiniteField.

    Attributes:
        field (FiniteField): the parent field
        value (int): canonical encoding in [0, q)
    """

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError("%d is not a valid encoding in F_%d" % (value, field.q))
        self.field = field
        self.value = value

    @property
    def coords(self):
        return self.field.coords(self.value)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch("%r and %r live in different fields" % (self, other))
            return other.value
        raise TypeError("cannot combine %r with %r" % (self, other))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return self * other.inv()

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, i=1):
        return FieldElement(self.field, self.field.frobenius(self.value, i))

    def trace(self):
        return self.field.trace(self.value)

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self.value < self._other(other)

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return 'FieldElement(F_%d, %d)' % (self.field.q, self.value)


@functools.lru_cache(maxsize=None)
def _cached_field(p, e):
    modulus = (0, 1) if e == 1 else smallest_irreducible(p, e)
    field = FiniteField(p, e, modulus)
    logger.info("Constructed F_%d with modulus %r", field.q, modulus)
    return field


def make_field(p, e=1, max_order=DEFAULT_MAX_ORDER):
    """Build F_{p^e} with the lexicographically smallest irreducible modulus.

    Raises:
        NonPrime: p is not prime
        SizeExceeded: p**e is larger than max_order
    """
    if not is_prime(p):
        raise NonPrime("%d is not prime" % p)
    if e < 1:
        raise ValueError("extension degree must be positive, got %d" % e)
    if p ** e > max_order:
        raise SizeExceeded("field order", p ** e, max_order)
    return _cached_field(p, e)


def field_of_order(q, max_order=DEFAULT_MAX_ORDER):
    """make_field() for a prime power q given as a single integer."""
    split = prime_power(q)
    if split is None:
        raise NonPrime("%d is not a prime power" % q)
    return make_field(split[0], split[1], max_order=max_order)
