# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import cmath
import math
import os
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from sgraphs import charsum
from sgraphs import errors
from sgraphs import executors
from sgraphs import gf
from sgraphs.charsum import CycInt, Poly


LONG_TESTS = bool(os.environ.get('SGRAPHS_LONG_TESTS'))


class CycIntTests(unittest.TestCase):
    def test_zeta_pow_top_exponent(self):
        self.assertEqual((-1, -1), charsum.zeta_pow(3, 2).coeffs)

    def test_zeta_pow_range(self):
        with self.assertRaises(ValueError):
            charsum.zeta_pow(5, 5)

    def test_sum_of_all_roots_is_zero(self):
        total = CycInt.zero(7)
        for j in range(7):
            total = total + charsum.zeta_pow(7, j)
        self.assertEqual(0, total)

    def test_product(self):
        zeta = charsum.zeta_pow(5, 1)
        self.assertEqual(charsum.zeta_pow(5, 0), zeta * zeta * zeta * zeta * zeta)
        self.assertEqual(charsum.zeta_pow(5, 3), zeta * charsum.zeta_pow(5, 2))

    def test_int_operands(self):
        value = CycInt.integer(5, 3)
        self.assertEqual(6, value * 2)
        self.assertEqual(4, value + 1)
        self.assertEqual(CycInt.integer(5, 2), value - 1)

    def test_numeric(self):
        value = charsum.zeta_pow(7, 2)
        self.assertAlmostEqual(0, abs(value.numeric() - cmath.exp(4j * math.pi / 7)), places=12)

    def test_real_embed(self):
        # zeta + zeta^-1 = 2 cos(2 pi / 5)
        value = charsum.zeta_pow(5, 1) + charsum.zeta_pow(5, 4)
        self.assertTrue(charsum.is_real(value))
        self.assertAlmostEqual(2 * math.cos(2 * math.pi / 5), charsum.real_embed(value), places=12)

    def test_not_real(self):
        with self.assertRaises(errors.NotReal):
            charsum.zeta_pow(5, 1).real_embed()

    def test_mixed_primes(self):
        with self.assertRaises(TypeError):
            charsum.zeta_pow(3, 1) + charsum.zeta_pow(5, 1)

    @settings(max_examples=100)
    @given(st.sampled_from([2, 3, 5, 7]), st.data())
    def test_conjugate_is_complex_conjugate(self, p, data):
        value = CycInt(p, data.draw(st.lists(st.integers(-20, 20), min_size=p - 1, max_size=p - 1)))
        self.assertAlmostEqual(0, abs(value.conjugate().numeric() - value.numeric().conjugate()), places=9)
        self.assertTrue((value + value.conjugate()).is_real())


class PolyTests(unittest.TestCase):
    def setUp(self):
        self.f5 = gf.make_field(5)

    def test_zero_degree(self):
        self.assertEqual(-1, Poly(self.f5, [0, 0]).degree)
        self.assertTrue(Poly(self.f5).is_zero())

    def test_monomial_folds(self):
        self.assertEqual(Poly.monomial(self.f5, 2), Poly.monomial(self.f5, 6))
        self.assertEqual(4, Poly.monomial(self.f5, 4).degree)

    def test_is_odd(self):
        self.assertTrue(Poly(self.f5, [0, 1, 0, 3]).is_odd())
        self.assertFalse(Poly(self.f5, [0, 1, 1]).is_odd())
        self.assertTrue(Poly(gf.make_field(2, 2), [1, 1, 1]).is_odd())

    def test_bad_coefficient(self):
        with self.assertRaises(errors.InvalidSpec):
            Poly(self.f5, [5])

    def test_evaluate(self):
        f = Poly(self.f5, [1, 0, 2])
        self.assertEqual([f(x) for x in range(5)], list(f.evaluate_array(range(5))))
        self.assertEqual(4, f(2))

    def test_reduced_exponent(self):
        self.assertEqual(4, charsum.reduced_exponent(4, 5))
        self.assertEqual(1, charsum.reduced_exponent(5, 5))
        self.assertEqual(3, charsum.reduced_exponent(11, 5))


class ExpSumTests(unittest.TestCase):
    def test_square_over_f3(self):
        result = charsum.exp_sum(Poly(gf.make_field(3), [0, 0, 1]))
        self.assertEqual((1, 2), result.value.coeffs)
        self.assertEqual(3, result.terms)

    def test_linear_sum_vanishes(self):
        for p, e in [(5, 1), (3, 2), (2, 3)]:
            field = gf.make_field(p, e)
            self.assertEqual(0, charsum.exp_sum(Poly(field, [0, 1])).value)

    def test_constant(self):
        self.assertEqual(7, charsum.exp_sum(Poly(gf.make_field(7))).value)

    def test_gauss_sum_magnitude(self):
        result = charsum.exp_sum(Poly(gf.make_field(7), [0, 0, 1]))
        self.assertAlmostEqual(math.sqrt(7), abs(result.numeric), places=9)

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from([5, 7, 11, 9, 25]), st.data())
    def test_odd_polynomials_are_real(self, q, data):
        field = gf.field_of_order(q)
        odd = [data.draw(st.integers(0, q - 1)) if j % 2 else 0 for j in range(min(q, 8))]
        self.assertTrue(charsum.exp_sum(Poly(field, odd)).value.is_real())

    @settings(max_examples=80, deadline=None)
    @given(st.sampled_from([5, 7, 11, 13, 9, 25, 27, 49, 121]), st.data())
    def test_weil_bound(self, q, data):
        field = gf.field_of_order(q)
        degree = data.draw(st.integers(1, 6).filter(lambda n: math.gcd(n, q) == 1 and n < q))
        coeffs = [data.draw(st.integers(0, q - 1)) for _j in range(degree)] + [
            data.draw(st.integers(1, q - 1))]
        report = charsum.weil_check(Poly(field, coeffs))
        self.assertTrue(report.applicable)
        self.assertTrue(report.holds)

    def test_weil_not_applicable(self):
        # X^5 is the Frobenius of F_25, so eps = 0; its degree is not coprime to q.
        report = charsum.weil_check(Poly(gf.make_field(5, 2), [0, 0, 0, 0, 0, 1]))
        self.assertFalse(report.applicable)


class MqTests(unittest.TestCase):
    def test_weil_range(self):
        for q in (5, 11, 17):
            mq = charsum.compute_mq(gf.field_of_order(q))
            self.assertLessEqual(2 * math.sqrt(q) - 2 - 1e-9, mq.numeric)
            self.assertLessEqual(mq.numeric, 2 * math.sqrt(q) + 1e-9)
            self.assertEqual((q - 1) ** 2, len(mq.table))
            self.assertEqual(mq.value, mq.table[mq.argmax])

    def test_pool_matches_serial(self):
        field = gf.make_field(11)
        with executors.PoolExecutor(jobs=2) as pool:
            parallel = charsum.compute_mq(field, executor=pool)
        serial = charsum.compute_mq(field)
        self.assertEqual(serial.table, parallel.table)
        self.assertEqual(serial.argmax, parallel.argmax)

    def test_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            charsum.compute_mq(gf.make_field(23), max_order=19)

    @unittest.skipUnless(LONG_TESTS, "set SGRAPHS_LONG_TESTS to run")
    def test_weil_tight_at_125(self):
        mq = charsum.compute_mq(gf.make_field(5, 3))
        self.assertAlmostEqual(2 * math.sqrt(125), mq.numeric, places=9)


if __name__ == '__main__':
    unittest.main()
