# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import math
import unittest
from fractions import Fraction

import networkx as nx
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from sgraphs import errors
from sgraphs import executors
from sgraphs import gf
from sgraphs import graphs
from sgraphs import spectral
from sgraphs.charsum import CycInt


def s32():
    return graphs.make_spec(gf.make_field(2), [[0, 1]], [[0, 1]])


def wenger_shaped(q=5):
    return graphs.make_spec(gf.make_field(q), [[0, 0, 1], [0, 0, 0, 1]], [[0, 1], [0, 1]])


class DenseTests(unittest.TestCase):
    def test_hexagon(self):
        values = spectral.spectrum_dense(graphs.Graph.from_networkx(nx.cycle_graph(6)))
        self.assertTrue(np.allclose([2, 1, 1, -1, -1, -2], values))

    def test_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            spectral.spectrum_dense(graphs.Graph.from_networkx(nx.cycle_graph(10)), max_order=8)

    def test_second_eigenvalue_of_array(self):
        result = spectral.second_eigenvalue([-2, 2, 1, 1])
        self.assertEqual(1.0, result.numeric)
        self.assertEqual(1.0, result.gap)
        self.assertIsNone(result.exact)


class FormulaTests(unittest.TestCase):
    def test_s32(self):
        spectrum = spectral.spectrum_formula(s32())
        self.assertEqual(8, spectrum.swept)
        self.assertEqual(2, spectrum.components)
        self.assertEqual(2, spectrum.top.value)
        self.assertEqual(-2, spectrum.bottom.value)
        self.assertEqual((0, 0, 0), spectrum.top.witness_w)
        lambda2 = spectral.second_eigenvalue(spectrum)
        self.assertEqual(2, lambda2.exact)
        self.assertEqual(0, lambda2.exact_gap)

    def test_wenger_shaped_lambda2(self):
        spectrum = spectral.spectrum_formula(wenger_shaped())
        self.assertEqual(1, spectrum.components)
        self.assertEqual(10, spectral.second_eigenvalue(spectrum).exact)

    def test_moments(self):
        spec = graphs.make_spec(gf.make_field(7), [[0, 0, 1]], [[0, 0, 0, 1]])
        m1, m2 = spectral.spectrum_formula(spec).moments()
        self.assertEqual(0, m1)
        self.assertEqual(7 ** 3 * 42, m2)

    def test_eigenvalue_at_matches_rows(self):
        spec = graphs.make_spec(gf.make_field(3, 2), [[0, 0, 1]], [[0, 1]])
        rows = spectral.eigenvalue_rows(spec)
        self.assertEqual((9 ** 3, 2), rows.shape)
        for index in (0, 1, 10, 100, 728):
            w = graphs.decode_vectors(spec.field, 3, [index])[0]
            self.assertEqual(CycInt(3, rows[index]), spectral.eigenvalue_at(spec, w))

    def test_eigenvalue_at_zero_is_degree(self):
        self.assertEqual(20, spectral.eigenvalue_at(wenger_shaped(), [0, 0, 0, 0]))

    def test_bad_character(self):
        with self.assertRaises(ValueError):
            spectral.eigenvalue_at(s32(), [0, 0])

    def test_iter_eigenvalues(self):
        pairs = list(spectral.iter_eigenvalues(s32()))
        self.assertEqual(8, len(pairs))
        self.assertEqual((0, 0, 0), pairs[0][0])
        self.assertEqual((1, 0, 0), pairs[1][0])

    def test_pool_matches_serial(self):
        spec = graphs.make_spec(gf.make_field(5), [[0, 0, 1], [0, 0, 0, 1]], [[0, 0, 0, 1], [0, 0, 0, 1]])
        serial = spectral.spectrum_formula(spec)
        with executors.PoolExecutor(jobs=2) as pool:
            parallel = spectral.spectrum_formula(spec, executor=pool)
        self.assertEqual(serial.multiset(), parallel.multiset())
        self.assertEqual([e.witness_w for e in serial.entries], [e.witness_w for e in parallel.entries])

    def test_work_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            spectral.spectrum_formula(wenger_shaped(), work_cap=1000)

    def test_sampled(self):
        spec = graphs.make_spec(gf.make_field(5), [[0, 0, 1]], [[0, 0, 0, 1]])
        spectrum = spectral.spectrum_formula(spec, sample=40, seed=3, exhaustive_limit=100)
        self.assertFalse(spectrum.exhaustive)
        self.assertEqual(20, spectrum.top.value)
        self.assertLessEqual(spectrum.swept, 41)
        again = spectral.spectrum_formula(spec, sample=40, seed=3, exhaustive_limit=100)
        self.assertEqual(spectrum.multiset(), again.multiset())

    def test_spectrum_from_rows(self):
        spec = wenger_shaped()
        rows = spectral.eigenvalue_rows(spec)
        self.assertEqual(spectral.spectrum_formula(spec).multiset(),
            spectral.spectrum_from_rows(spec, rows).multiset())

    def test_as_dict(self):
        payload = spectral.spectrum_formula(s32()).as_dict()
        self.assertEqual(2, payload['components'])
        self.assertEqual([0], payload['moments']['m1'])
        self.assertEqual(8, sum(entry['multiplicity'] for entry in payload['entries']))


@st.composite
def oracle_specs(draw):
    q = draw(st.sampled_from([2, 3, 4, 5, 7, 9]))
    k = draw(st.sampled_from([3, 4] if q <= 5 else [3]))
    field = gf.field_of_order(q)
    fs, gs = [], []
    for _i in range(k - 2):
        fs.append([draw(st.integers(0, q - 1)) for _j in range(draw(st.integers(1, q)))])
        gs.append([
            draw(st.integers(0, q - 1)) if j % 2 or field.p == 2 else 0
            for j in range(draw(st.integers(1, q)))
        ])
    return graphs.make_spec(field, fs, gs)


class OracleTests(unittest.TestCase):
    @settings(max_examples=15, deadline=None)
    @given(oracle_specs())
    def test_formula_matches_dense(self, spec):
        formula = spectral.spectrum_formula(spec).numeric_values()
        dense = spectral.spectrum_dense(graphs.build_s_graph(spec).graph())
        self.assertEqual(spec.q ** spec.k, formula.size)
        self.assertLessEqual(float(np.max(np.abs(formula - dense))), 1e-6)

    def test_components_match_bfs(self):
        for spec in (s32(), wenger_shaped(),
                graphs.make_spec(gf.make_field(3), [[0, 1], [0, 2]], [[0, 1], [0, 1]])):
            spectrum = spectral.spectrum_formula(spec)
            self.assertEqual(graphs.components(graphs.build_s_graph(spec).graph()).count,
                spectrum.components)


class RamanujanTests(unittest.TestCase):
    def test_disconnected(self):
        with self.assertRaises(errors.Disconnected):
            spectral.is_ramanujan(spectral.spectrum_formula(s32()))

    def test_petersen(self):
        values = spectral.spectrum_dense(graphs.Graph.from_networkx(nx.petersen_graph()))
        self.assertTrue(spectral.is_ramanujan(values))

    def test_nonbipartite_witness(self):
        spec = graphs.make_spec(gf.make_field(5), [[0, 0, 1]], [[0, 0, 0, 1]])
        spectrum = spectral.spectrum_formula(spec)
        self.assertTrue(spectral.nonbipartite_witness(spectrum))
        self.assertLess(spectrum.bottom.numeric, -5)


class CheegerTests(unittest.TestCase):
    def test_cycles(self):
        for n in (6, 8, 10):
            result = spectral.cheeger_exact(graphs.Graph.from_networkx(nx.cycle_graph(n)))
            self.assertEqual(Fraction(2, n // 2), result.h)
            self.assertTrue(result.holds)

    def test_k4(self):
        result = spectral.cheeger_exact(graphs.Graph.from_networkx(nx.complete_graph(4)))
        self.assertEqual(2, result.h)
        self.assertAlmostEqual(-1, result.lambda2)
        self.assertAlmostEqual(2, result.lower)
        self.assertTrue(result.holds)

    def test_s32_component(self):
        g = graphs.build_s_graph(s32()).graph()
        found = graphs.components(g)
        part = g.subgraph(found.members(0))
        result = spectral.cheeger_exact(part)
        self.assertEqual(1, result.h)
        self.assertTrue(result.holds)

    def test_disconnected_has_zero_h(self):
        result = spectral.cheeger_exact(graphs.build_s_graph(s32()).graph())
        self.assertEqual(0, result.h)
        self.assertFalse(result.connected)
        self.assertIsNone(result.holds)

    def test_cap(self):
        with self.assertRaises(errors.SizeExceeded):
            spectral.cheeger_exact(graphs.Graph.from_networkx(nx.cycle_graph(30)))

    def test_upper_bound(self):
        result = spectral.cheeger_exact(graphs.Graph.from_networkx(nx.cycle_graph(8)))
        self.assertAlmostEqual(math.sqrt(4 - 2), result.upper)


if __name__ == '__main__':
    unittest.main()
