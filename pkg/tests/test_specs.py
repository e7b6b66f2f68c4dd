# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import json
import os
import tempfile
import unittest

from sgraphs import errors
from sgraphs import gf
from sgraphs import graphs
from sgraphs import specs


class ParseTests(unittest.TestCase):
    def test_poly_list(self):
        self.assertEqual([[0, 0, 1], [0, 0, 0, 1]], specs.parse_poly_list('[[0,0,1],[0,0,0,1]]'))

    def test_bad_json(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.parse_poly_list('[[0,0,1]')

    def test_not_integers(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.parse_poly_list('[[0, 1.5]]')
        with self.assertRaises(errors.InvalidSpec):
            specs.parse_poly_list('[0, 1]')


class SpecDictTests(unittest.TestCase):
    def test_roundtrip(self):
        data = {'p': 5, 'e': 1, 'k': 3, 'f': [[0, 0, 1]], 'g': [[0, 0, 0, 1]]}
        spec = specs.spec_from_dict(data)
        self.assertEqual(graphs.make_spec(gf.make_field(5), [[0, 0, 1]], [[0, 0, 0, 1]]), spec)
        self.assertEqual(data, json.loads(specs.dump_spec(spec)))

    def test_e_defaults_to_one(self):
        spec = specs.spec_from_dict({'p': 3, 'k': 3, 'f': [[0, 1]], 'g': [[0, 1]]})
        self.assertEqual(3, spec.q)

    def test_unknown_key(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.spec_from_dict({'p': 3, 'k': 3, 'f': [[0, 1]], 'g': [[0, 1]], 'h': []})

    def test_missing_key(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.spec_from_dict({'p': 3, 'k': 3, 'f': [[0, 1]]})

    def test_length_mismatch(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.spec_from_values(3, 1, 4, [[0, 1]], [[0, 1]])

    def test_non_prime(self):
        with self.assertRaises(errors.NonPrime):
            specs.spec_from_values(6, 1, 3, [[0, 1]], [[0, 1]])

    def test_field_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            specs.spec_from_values(3, 5, 3, [[0, 1]], [[0, 1]], max_order=100)

    def test_read_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as f:
            json.dump({'p': 2, 'e': 2, 'k': 3, 'f': [[0, 1]], 'g': [[1, 1]]}, f)
        self.addCleanup(os.unlink, f.name)
        spec = specs.read_spec_file(f.name)
        self.assertEqual(4, spec.q)
        self.assertEqual(12, spec.degree)

    def test_read_bad_file(self):
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as f:
            f.write('{"p": ')
        self.addCleanup(os.unlink, f.name)
        with self.assertRaises(errors.InvalidSpec):
            specs.read_spec_file(f.name)


class TemplateTests(unittest.TestCase):
    def test_terms(self):
        template = specs.PolyTemplate('3 + X + 2*X^3 + X^(p^1)')
        self.assertEqual([(3, 0, None), (1, 1, None), (2, 3, None), (1, None, 1)], template.terms)

    def test_instantiate(self):
        poly = specs.PolyTemplate('2*X^3 + X').instantiate(gf.make_field(7))
        self.assertEqual((0, 1, 0, 2), poly.coeffs)

    def test_frobenius_power(self):
        self.assertEqual(9, specs.PolyTemplate('X^(p^2)').instantiate(gf.make_field(3, 3)).degree)

    def test_fold(self):
        # X^(p^1) over F_5 is X^5, the same function as X.
        with self.assertLogs('sgraphs.specs', level='WARNING'):
            poly = specs.PolyTemplate('X^(p^1)').instantiate(gf.make_field(5))
        self.assertEqual((0, 1), poly.coeffs)

    def test_bad_term(self):
        for text in ('Y^2', 'X^', '', 'X + '):
            with self.assertRaises(errors.InvalidSpec):
                specs.PolyTemplate(text)

    def test_family(self):
        family = specs.parse_family('X^2, X^3', 'X^3, X^3')
        self.assertEqual(4, family.k)
        spec = family.instantiate(11)
        self.assertEqual(11, spec.q)
        self.assertEqual([2, 3], [f.degree for f in spec.fs])
        self.assertEqual('f=[X^2, X^3]; g=[X^3, X^3]', str(family))

    def test_family_mismatch(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.parse_family('X^2, X^3', 'X^3')

    def test_family_non_prime_power(self):
        with self.assertRaises(errors.NonPrime):
            specs.parse_family('X^2', 'X^3').instantiate(12)


class BipartiteTests(unittest.TestCase):
    def test_known(self):
        field = gf.make_field(3)
        self.assertEqual('wenger', specs.bipartite_spec('wenger', field, 2).name)
        self.assertEqual(4, specs.bipartite_spec('d4', field, 2).k)

    def test_unknown(self):
        with self.assertRaises(errors.InvalidSpec):
            specs.bipartite_spec('moebius', gf.make_field(3), 2)


if __name__ == '__main__':
    unittest.main()
