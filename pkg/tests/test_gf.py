# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from sgraphs import errors
from sgraphs import gf


FIELDS = [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (5, 2)]


class PrimeTests(unittest.TestCase):
    def test_is_prime(self):
        self.assertEqual([n for n in range(20) if gf.is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19])

    def test_prime_power(self):
        self.assertEqual((5, 3), gf.prime_power(125))
        self.assertEqual((2, 1), gf.prime_power(2))
        self.assertIsNone(gf.prime_power(12))
        self.assertIsNone(gf.prime_power(1))


class MakeFieldTests(unittest.TestCase):
    def test_f4_modulus(self):
        field = gf.make_field(2, 2)
        self.assertEqual((1, 1, 1), field.modulus)
        self.assertEqual(4, field.q)

    def test_prime_field_modulus(self):
        self.assertEqual((0, 1), gf.make_field(7).modulus)

    def test_f125_modulus_is_smallest_irreducible(self):
        field = gf.make_field(5, 3)
        self.assertEqual(125, field.q)
        # Every lexicographically smaller monic cubic has a root in F_5.
        for c0 in range(5):
            for c1 in range(5):
                for c2 in range(5):
                    candidate = (c0, c1, c2, 1)
                    if candidate == field.modulus:
                        return
                    roots = [x for x in range(5) if (c0 + c1 * x + c2 * x * x + x ** 3) % 5 == 0]
                    self.assertTrue(roots, candidate)
        self.fail("modulus not found")

    def test_cached(self):
        self.assertIs(gf.make_field(3, 2), gf.make_field(3, 2))

    def test_non_prime(self):
        with self.assertRaises(errors.NonPrime):
            gf.make_field(4)
        with self.assertRaises(errors.NonPrime):
            gf.field_of_order(6)

    def test_size_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            gf.make_field(2, 20, max_order=1024)

    def test_field_of_order(self):
        field = gf.field_of_order(9)
        self.assertEqual((3, 2), (field.p, field.e))


class ArithmeticTests(unittest.TestCase):
    def test_inverse_in_f5(self):
        self.assertEqual(3, gf.make_field(5).inv(2))

    def test_zero_has_no_inverse(self):
        field = gf.make_field(2, 2)
        with self.assertRaises(errors.DivisionByZero):
            field.inv(0)
        with self.assertRaises(ZeroDivisionError):
            field.element(1) / field.element(0)

    def test_frobenius_fixes_prime_subfield(self):
        field = gf.make_field(3, 2)
        for x in range(3):
            self.assertEqual(x, field.frobenius(x))
        self.assertEqual(9, len(set(field.frobenius(x) for x in range(9))))

    def test_trace_of_prime_field(self):
        field = gf.make_field(7)
        self.assertEqual(list(range(7)), [field.trace(x) for x in range(7)])

    def test_trace_is_onto(self):
        field = gf.make_field(2, 3)
        counts = np.bincount(field.trace_array(np.arange(8)), minlength=2)
        self.assertEqual([4, 4], list(counts))

    def test_mixed_fields(self):
        with self.assertRaises(errors.FieldMismatch):
            gf.make_field(3).element(1) + gf.make_field(5).element(1)

    def test_arrays_match_scalars(self):
        for p, e in FIELDS:
            field = gf.make_field(p, e)
            xs, ys = np.meshgrid(np.arange(field.q), np.arange(field.q))
            sums = field.add_array(xs, ys)
            prods = field.mul_array(xs, ys)
            for x, y, s, m in zip(xs.ravel(), ys.ravel(), sums.ravel(), prods.ravel()):
                self.assertEqual(field.add(int(x), int(y)), s)
                self.assertEqual(field.mul(int(x), int(y)), m)


@st.composite
def field_and_elements(draw, count=2):
    p, e = draw(st.sampled_from(FIELDS))
    field = gf.make_field(p, e)
    values = [draw(st.integers(0, field.q - 1)) for _i in range(count)]
    return [field] + values


class FieldPropertyTests(unittest.TestCase):
    @settings(max_examples=200)
    @given(field_and_elements(3))
    def test_distributive(self, args):
        field, x, y, z = args
        self.assertEqual(
            field.mul(x, field.add(y, z)),
            field.add(field.mul(x, y), field.mul(x, z)),
        )

    @settings(max_examples=200)
    @given(field_and_elements(1))
    def test_inverse(self, args):
        field, x = args
        if x:
            self.assertEqual(1, field.mul(x, field.inv(x)))
        self.assertEqual(0, field.add(x, field.neg(x)))

    @settings(max_examples=200)
    @given(field_and_elements(2))
    def test_trace_additive(self, args):
        field, x, y = args
        self.assertEqual((field.trace(x) + field.trace(y)) % field.p, field.trace(field.add(x, y)))

    @settings(max_examples=200)
    @given(field_and_elements(1))
    def test_fermat(self, args):
        field, x = args
        self.assertEqual(x, field.pow(x, field.q))
        self.assertEqual(x, field.frobenius(x, field.e))


if __name__ == '__main__':
    unittest.main()
