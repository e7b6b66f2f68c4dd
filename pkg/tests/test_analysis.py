# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

import math
import os
import unittest
from fractions import Fraction
from unittest import mock

import networkx as nx

from sgraphs import analysis
from sgraphs import errors
from sgraphs import gf
from sgraphs import graphs
from sgraphs import specs
from sgraphs.records import FAIL, PASS, SKIPPED, HYPOTHESIS_VIOLATED


LONG_TESTS = bool(os.environ.get('SGRAPHS_LONG_TESTS'))


def f5():
    return gf.make_field(5)


class NamedSpecTests(unittest.TestCase):
    def test_theorem3_shape(self):
        spec = analysis.theorem3_spec(f5(), 5)
        self.assertEqual([2, 3, 4], [f.degree for f in spec.fs])
        self.assertEqual([3, 3, 3], [g.degree for g in spec.gs])

    def test_theorem4_folds(self):
        spec = analysis.theorem4_spec(f5(), 3)
        self.assertEqual(1, spec.fs[0].degree)
        spec = analysis.theorem4_spec(gf.make_field(5, 3), 4)
        self.assertEqual([5, 25], [f.degree for f in spec.fs])

    def test_remark1_k(self):
        self.assertEqual(4, analysis.remark1_spec(f5(), 4).k)
        with self.assertRaises(ValueError):
            analysis.remark1_spec(f5(), 5)


class WAnalysisTests(unittest.TestCase):
    def test_trivial_character(self):
        spec = analysis.remark1_spec(f5(), 3)
        result = analysis.analyze_w(spec, (0, 0, 0))
        self.assertEqual(5, result.n_w)
        self.assertEqual(0, result.s_w_size)
        self.assertEqual(5, result.t_w)
        self.assertTrue(analysis.lemma51_check(spec, (0, 0, 0)))

    def test_higher_coefficient(self):
        # g = X^3: w_3 f_3(u) c_{3,3} is nonzero exactly when u != 0.
        spec = analysis.remark1_spec(f5(), 3)
        result = analysis.analyze_w(spec, (0, 0, 1))
        self.assertEqual(4, result.s_w_size)
        self.assertEqual(1, result.n_w)
        self.assertEqual(1, result.t_w)

    def test_lemma51_needs_small_dg(self):
        # g = 0 has degree -1.
        spec = graphs.make_spec(gf.make_field(3), [[0, 1]], [[0, 0, 0]])
        with self.assertRaises(errors.HypothesisViolated):
            analysis.lemma51_check(spec, (0, 0, 0))


class SweepTests(unittest.TestCase):
    def test_lemma51(self):
        for spec in (
            analysis.remark1_spec(f5(), 3),
            graphs.make_spec(gf.make_field(7), [[0, 0, 1]], [[0, 1, 0, 1]]),
        ):
            verdict = analysis.lemma51_sweep(spec)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
            self.assertEqual(spec.q ** 3, verdict.computed['checked'])

    def test_lemma61(self):
        verdict = analysis.classify_cubic(analysis.remark1_spec(f5(), 4))
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertEqual(5 ** 4, verdict.computed.get('exact', 0) + verdict.computed.get('bounded', 0))

    def test_lemma61_needs_cubes(self):
        spec = graphs.make_spec(f5(), [[0, 0, 1]], [[0, 1]])
        with self.assertRaises(errors.HypothesisViolated):
            analysis.classify_cubic(spec)

    def test_theorem52(self):
        spec = graphs.make_spec(gf.make_field(7), [[0, 0, 1]], [[0, 0, 0, 1]])
        verdict = analysis.theorem52_bound(spec)
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertEqual(0, verdict.details['intermediate_violations'])
        self.assertAlmostEqual(2 * 6 + 7 * (2 * math.sqrt(7) + 1), verdict.predicted)


class ConnectivityTests(unittest.TestCase):
    def test_connected_rank(self):
        report = analysis.connectivity_rank(analysis.remark1_spec(f5(), 3))
        self.assertEqual(3, report.rank)
        self.assertTrue(report.connected)
        self.assertFalse(report.condition1)
        self.assertTrue(report.condition2)

    def test_condition1(self):
        report = analysis.connectivity_rank(graphs.make_spec(f5(), [[0, 0, 1]], [[0, 1]]))
        self.assertTrue(report.condition1)
        self.assertEqual(1, report.predicted_components)

    def test_dependent_fs(self):
        spec = graphs.make_spec(gf.make_field(3), [[0, 1], [0, 2]], [[0, 1], [0, 1]])
        report = analysis.connectivity_rank(spec)
        self.assertEqual(2, report.rank)
        self.assertEqual(9, report.predicted_components)

    def test_checks_agree(self):
        field3 = gf.make_field(3)
        for spec in (
            analysis.remark1_spec(f5(), 3),
            graphs.make_spec(f5(), [[0, 0, 1]], [[0, 1]]),
            graphs.make_spec(f5(), [[0, 1]], [[0, 1]]),
            graphs.make_spec(f5(), [[1]], [[0, 3]]),
            graphs.make_spec(f5(), [[0, 0, 1], [0, 0, 2]], [[0, 1], [0, 1]]),
            graphs.make_spec(field3, [[0, 1], [0, 2]], [[0, 1], [0, 1]]),
            graphs.make_spec(field3, [[0, 0, 1], [0, 1]], [[0, 1], [0, 2]]),
            graphs.make_spec(field3, [[0, 1, 1], [0, 2, 2]], [[0, 1], [0, 1]]),
            graphs.make_spec(gf.make_field(7), [[0, 0, 1]], [[0, 1, 0, 1]]),
            graphs.make_spec(gf.make_field(7), [[0, 1]], [[0, 1]]),
        ):
            verdict = analysis.connectivity_check(spec)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())


class TheoremTests(unittest.TestCase):
    def test_theorem3(self):
        for q, k in [(5, 4), (5, 5), (5, 6), (11, 4)]:
            verdict = analysis.verify_theorem3(q, k)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
            self.assertEqual('equality', verdict.details['claim_strength'])

    def test_theorem3_below_wenger(self):
        verdict = analysis.verify_theorem3(5, 4)
        self.assertEqual(10, verdict.details['wenger_lambda2'])

    def test_theorem3_hypotheses(self):
        with self.assertRaises(errors.HypothesisViolated):
            analysis.verify_theorem3(7, 4)
        with self.assertRaises(errors.HypothesisViolated):
            analysis.verify_theorem3(5, 3)
        with self.assertRaises(errors.HypothesisViolated):
            analysis.verify_theorem3(5, 7)
        with self.assertRaises(errors.HypothesisViolated):
            analysis.verify_theorem3(8, 4)

    def test_theorem4(self):
        for q, k in [(5, 3), (11, 3), (17, 3)]:
            verdict = analysis.verify_theorem4(q, k)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())

    def test_theorem4_hypotheses(self):
        with self.assertRaises(errors.HypothesisViolated):
            analysis.verify_theorem4(5, 4)

    @unittest.skipUnless(LONG_TESTS, "set SGRAPHS_LONG_TESTS to run")
    def test_theorem4_over_f125(self):
        verdict = analysis.verify_theorem4(125, 3, sample=10 ** 4)
        self.assertTrue(verdict.passed, verdict.as_dict())


class RemarkTests(unittest.TestCase):
    def test_remark1(self):
        for q in (5, 7, 11, 13):
            verdict = analysis.remark1_witness(q)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
            self.assertLess(verdict.details['margin'], 0)

    @unittest.skipUnless(LONG_TESTS, "set SGRAPHS_LONG_TESTS to run")
    def test_remark1_long(self):
        for q in (17, 19):
            self.assertEqual(PASS, analysis.remark1_witness(q).verdict)
        for q in (5, 7, 11, 13):
            self.assertEqual(PASS, analysis.remark1_witness(q, k=4).verdict)

    def test_remark1_needs_prime(self):
        with self.assertRaises(errors.HypothesisViolated):
            analysis.remark1_witness(9)

    def test_remark2(self):
        verdict = analysis.remark2_bound(5, 4, 1)
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertEqual(0, verdict.details['classification_violations'])

    def test_remark2_quintic(self):
        # g_i = X^5; 7 and 13 are not 1 mod 5.
        for q, k in ((7, 3), (7, 4), (13, 3)):
            verdict = analysis.remark2_bound(q, k, 2)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
            self.assertEqual(0, verdict.details['classification_violations'])

    def test_remark2_hypotheses(self):
        with self.assertRaises(errors.HypothesisViolated):
            analysis.remark2_bound(7, 4, 1)
        with self.assertRaises(errors.HypothesisViolated):
            analysis.remark2_bound(5, 4, 0)
        with self.assertRaises(errors.HypothesisViolated):
            analysis.remark2_bound(11, 4, 2)

    def test_remark3(self):
        verdicts = analysis.mq_scan(49)
        self.assertEqual(['remark3(q=%d)' % q for q in (5, 11, 17, 23, 29, 41, 47)],
            [v.claim for v in verdicts])
        for verdict in verdicts:
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
            self.assertLessEqual(verdict.details['weil_ratio'], 1 + 1e-9)

    def test_cover(self):
        verdict = analysis.cover_check(analysis.remark1_spec(f5(), 3), analysis.remark1_spec(f5(), 4))
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertTrue(verdict.details['projection'])

    def test_cover_theorem3_shaped(self):
        field = f5()
        verdict = analysis.cover_check(analysis.theorem3_spec(field, 4), analysis.theorem3_spec(field, 5))
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertTrue(verdict.details['equality_condition'])
        self.assertTrue(verdict.details['lambda2_equal'])

    def test_cover_strict_growth(self):
        # M_5 = 2 + golden ratio, so (q - 1)M_5 < 15 = lambda_2(S(6,5)).
        field = f5()
        verdict = analysis.cover_check(analysis.theorem3_spec(field, 5), analysis.theorem3_spec(field, 6))
        self.assertEqual(PASS, verdict.verdict, verdict.as_dict())
        self.assertFalse(verdict.details['equality_condition'])
        self.assertFalse(verdict.details['lambda2_equal'])

    def test_cover_equality_enforced(self):
        field = f5()
        with mock.patch.object(analysis, 'compute_mq', return_value=mock.Mock(numeric=100.0)):
            verdict = analysis.cover_check(analysis.theorem3_spec(field, 5), analysis.theorem3_spec(field, 6))
        self.assertTrue(verdict.details['equality_condition'])
        self.assertEqual(FAIL, verdict.verdict)

    def test_cover_mismatch(self):
        with self.assertRaises(errors.SpecMismatch):
            analysis.cover_check(graphs.make_spec(f5(), [[0, 1]], [[0, 1]]), analysis.remark1_spec(f5(), 4))


class CombinatorialTests(unittest.TestCase):
    def test_distance_two_correspondence(self):
        for q in (3, 5):
            bip = graphs.wenger_spec(gf.make_field(q), 2)
            g = graphs.build_bipartite(bip)
            verdict = analysis.distance_two_correspondence(g, graphs.POINTS)
            self.assertEqual(PASS, verdict.verdict, verdict.as_dict())

    def test_distance_two_needs_girth(self):
        g = graphs.Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        with self.assertRaises(errors.HypothesisViolated):
            analysis.distance_two_correspondence(g, graphs.POINTS)

    def test_oracle(self):
        verdict = analysis.oracle_check(analysis.remark1_spec(f5(), 3))
        self.assertEqual(PASS, verdict.verdict)

    def test_cheeger(self):
        g = graphs.Graph.from_networkx(nx.cycle_graph(6))
        self.assertEqual(PASS, analysis.cheeger_check(g, 'c6', Fraction(2, 3)).verdict)
        self.assertEqual(FAIL, analysis.cheeger_check(g, 'c6', Fraction(1)).verdict)


class FamilyTests(unittest.TestCase):
    def test_table(self):
        template = specs.parse_family('X^2', 'X^3')
        report = analysis.family_table(template, [5, 11, 17])
        self.assertEqual([5, 11, 17], [row['q'] for row in report.rows])
        self.assertEqual(PASS, report.trend.verdict)
        ratios = [row['ratio'] for row in report.rows]
        self.assertTrue(all(b < a for a, b in zip(ratios, ratios[1:])), ratios)
        self.assertAlmostEqual(0.2, ratios[0], places=9)
        for row in report.rows:
            self.assertEqual(PASS, row['verdict'])
            self.assertLessEqual(row['lambda2'], row['bound'] + 1e-9)

    def test_single_row_is_skipped(self):
        report = analysis.family_table(specs.parse_family('X^2', 'X^3'), [5])
        self.assertEqual(SKIPPED, report.trend.verdict)

    def test_hypothesis_row(self):
        # d_g = 3 is not below p = 3.
        row = analysis.family_row(specs.parse_family('X^2', 'X^3').instantiate(9))
        self.assertEqual(HYPOTHESIS_VIOLATED, row['verdict'])


if __name__ == '__main__':
    unittest.main()
