# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Verification of the eigenvalue bounds, connectivity criteria and
second-eigenvalue formulas for S(k,q).

Every verify_* / *_check / *_sweep operation returns Verdict records;
hypotheses that fail raise HypothesisViolated before anything is computed.
"""

import collections
import logging
import math

import numpy as np

from . import spectral
from .charsum import DEFAULT_MQ_MAX_ORDER, CycInt, Poly, compute_mq, format_decimal, reduced_exponent
from .errors import HypothesisViolated, SpecMismatch
from .gf import field_of_order, is_prime, prime_power
from .graphs import (
    DEFAULT_VERTEX_CAP, SGraphSpec, build_s_graph, components, distance_two, make_spec,
)
from .records import FAIL, HYPOTHESIS_VIOLATED, PASS, SKIPPED, Verdict

logger = logging.getLogger(__name__)


TOLERANCE = 1e-9
ORACLE_TOLERANCE = 1e-6


# Named specs
# -----------

def theorem3_spec(field, k):
    """f_i = X^(i-1), g_i = X^3."""
    return SGraphSpec(field, k,
        [Poly.monomial(field, i - 1) for i in range(3, k + 1)],
        [Poly.monomial(field, 3) for _i in range(3, k + 1)])


def theorem4_spec(field, k):
    """f_i = X^(p^(i-2)) folded modulo X^q - X, g_i = X^3."""
    fs = []
    for i in range(3, k + 1):
        n = field.p ** (i - 2)
        folded = reduced_exponent(n, field.q)
        if folded != n:
            logger.warning("f_%d = X^%d exceeds degree q - 1 = %d; using X^%d (same function on F_%d)",
                i, n, field.q - 1, folded, field.q)
        fs.append(Poly.monomial(field, folded))
    return SGraphSpec(field, k, fs, [Poly.monomial(field, 3) for _i in range(3, k + 1)])


def remark2_spec(field, k, n):
    """f_i = X^(i-1), g_i = X^(2n+1)."""
    return SGraphSpec(field, k,
        [Poly.monomial(field, i - 1) for i in range(3, k + 1)],
        [Poly.monomial(field, 2 * n + 1) for _i in range(3, k + 1)])


def remark1_spec(field, k=3):
    """S(3,q; X^2, X^3) or S(4,q; X^2, X^3, X^3, X^3)."""
    if k == 3:
        return make_spec(field, [Poly.monomial(field, 2)], [Poly.monomial(field, 3)])
    if k == 4:
        return make_spec(field, [Poly.monomial(field, 2), Poly.monomial(field, 3)],
            [Poly.monomial(field, 3), Poly.monomial(field, 3)])
    raise ValueError("the non-bipartite witness is defined for k in (3, 4), got %d" % k)


def _is_theorem3_shaped(spec):
    field = spec.field
    return (
        all(f == Poly.monomial(field, i - 1) for i, f in enumerate(spec.fs, 3))
        and all(g == Poly.monomial(field, 3) for g in spec.gs)
    )


# Hypotheses
# ----------

def _require_cubic_field(q, what):
    split = prime_power(q)
    if split is None:
        raise HypothesisViolated("%s needs a prime power q, got %d" % (what, q))
    if q % 2 == 0:
        raise HypothesisViolated("%s needs q odd, got %d" % (what, q))
    if q % 3 != 2:
        raise HypothesisViolated("%s needs q = 2 mod 3, got %d = %d mod 3" % (what, q, q % 3))
    return split


def _require_degrees(spec, what, need_df=False):
    d_g = spec.d_g
    p = spec.field.p
    if not 1 <= d_g < p:
        raise HypothesisViolated("%s needs 1 <= d_g < p, got d_g = %d with p = %d" % (what, d_g, p))
    if need_df and spec.d_f < 1:
        raise HypothesisViolated("%s needs d_f >= 1, got %d" % (what, spec.d_f))


# N_w, S_w, T_w
# -------------

class WAnalysis(object):
    """Per-character solution counts.

    Attributes:
        w (int tuple): the character, as encodings
        n_w (int): u solving the linear system of the first-order and
            higher-order coefficients of a
        s_w_size (int): u where some higher-order coefficient is nonzero
        t_w (int): roots in F_q of F = sum_{i >= 3} f_i w_i
    """
    __slots__ = ('w', 'n_w', 's_w_size', 't_w')

    def __init__(self, w, n_w, s_w_size, t_w):
        self.w = w
        self.n_w = n_w
        self.s_w_size = s_w_size
        self.t_w = t_w

    def as_dict(self):
        return {'w': list(self.w), 'N_w': self.n_w, 'S_w': self.s_w_size, 'T_w': self.t_w}

    def __repr__(self):
        return 'WAnalysis(w=%r, N_w=%d, |S_w|=%d, T_w=%d)' % (self.w, self.n_w, self.s_w_size, self.t_w)


class WAnalyzer(object):
    """Shared per-spec tables for repeated analyze_w() calls."""

    def __init__(self, spec):
        field = spec.field
        self.spec = spec
        self.field = field
        self.u = np.arange(field.q, dtype=np.int64)
        self.d_g = max(spec.d_g, 1)
        self.fvals = [f.evaluate_array(self.u) for f in spec.fs]
        # coefficients[i][j] = c_{i+3, j+1}
        self.coefficients = [[g.coefficient(j) for j in range(1, self.d_g + 1)] for g in spec.gs]

    def analyze(self, w):
        field = self.field
        w = tuple(int(x) for x in w)
        q = field.q
        total = np.zeros(q, dtype=np.int64)
        sums = [np.zeros(q, dtype=np.int64) for _j in range(self.d_g)]
        for fv, cs, w_i in zip(self.fvals, self.coefficients, w[2:]):
            if not w_i:
                continue
            weighted = field.mul_array(fv, w_i)
            total = field.add_array(total, weighted)
            for j, c in enumerate(cs):
                if c:
                    sums[j] = field.add_array(sums[j], field.mul_array(weighted, c))

        first = field.add_array(field.add_array(w[0], field.mul_array(self.u, w[1])), sums[0])
        higher = np.zeros(q, dtype=bool)
        for s in sums[1:]:
            higher |= s != 0
        n_w = int(np.count_nonzero((first == 0) & ~higher))
        s_w = int(np.count_nonzero(higher))
        t_w = int(np.count_nonzero(total == 0))
        return WAnalysis(w, n_w, s_w, t_w)


def analyze_w(spec, w):
    return WAnalyzer(spec).analyze(w)


# Lemma 5.1 and Theorem 5.2
# -------------------------

def _lemma51_holds(spec, analysis, value):
    q = spec.q
    bound = analysis.n_w * (q - 1) + analysis.s_w_size * ((spec.d_g - 1) * math.sqrt(q) + 1)
    top = value == spec.degree
    return value.real_embed() <= bound + TOLERANCE and top == (analysis.n_w == q)


def lemma51_check(spec, w, value=None):
    """lambda_w <= N_w(q-1) + |S_w|((d_g-1)sqrt(q)+1), and lambda_w = q(q-1) iff N_w = q.

    Raises:
        HypothesisViolated: d_g >= p or d_g < 1
    """
    _require_degrees(spec, "Lemma 5.1")
    if value is None:
        value = spectral.eigenvalue_at(spec, w)
    return _lemma51_holds(spec, analyze_w(spec, w), value)


def lemma51_sweep(spec, work_cap=spectral.DEFAULT_WORK_CAP, executor=None):
    """lemma51_check() for every w."""
    _require_degrees(spec, "Lemma 5.1")
    analyzer = WAnalyzer(spec)
    violations = []
    count = 0
    for w, value in spectral.iter_eigenvalues(spec, work_cap=work_cap, executor=executor):
        count += 1
        if not _lemma51_holds(spec, analyzer.analyze(w), value):
            violations.append(list(w))
    return Verdict.check('lemma51(%r)' % spec, not violations,
        computed={'checked': count, 'violations': len(violations)},
        predicted={'violations': 0},
        first_violations=violations[:10])


def theorem52_bound(spec, work_cap=spectral.DEFAULT_WORK_CAP, executor=None, intermediate=True,
        **sweep_kwargs):
    """Every nontrivial lambda_w <= d_f(q-1) + q((d_g-1)sqrt(q)+1).

    With intermediate=True, exhaustive sweeps also check the sharper
    per-w inequality lambda_w <= (N_w-1)q + |S_w|((d_g-1)sqrt(q)+2).
    """
    _require_degrees(spec, "Theorem 5.2", need_df=True)
    q = spec.q
    bound = spec.d_f * (q - 1) + q * ((spec.d_g - 1) * math.sqrt(q) + 1)
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    nontrivial = [entry.numeric for entry in spectrum.entries if entry.value != spec.degree]
    worst = max(nontrivial) if nontrivial else None
    holds = worst is None or worst <= bound + TOLERANCE

    details = {'exhaustive': spectrum.exhaustive, 'ratio_to_q2': None if worst is None else worst / q ** 2}
    if intermediate and spectrum.exhaustive:
        analyzer = WAnalyzer(spec)
        slack = (spec.d_g - 1) * math.sqrt(q) + 2
        failures = 0
        for w, value in spectral.iter_eigenvalues(spec, work_cap=work_cap, executor=executor):
            a = analyzer.analyze(w)
            if value.real_embed() > (a.n_w - 1) * q + a.s_w_size * slack + TOLERANCE:
                failures += 1
        details['intermediate_violations'] = failures
        holds = holds and failures == 0
    return Verdict.check('theorem52(%r)' % spec, holds, computed=worst, predicted=bound, **details)


# Connectivity
# ------------

def _rank(field, rows):
    """Rank over F_q by Gaussian elimination."""
    rows = [list(row) for row in rows]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inverse, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _padded(poly, q):
    return [poly.coefficient(t) for t in range(q)]


class ConnectivityReport(object):
    """Rank of v_1 = (1, 0, ...), v_2 = (X, 0, ...), v_i = (c_{i,1} f_i, ..., c_{i,d_g} f_i).

    Attributes:
        rank (int)
        predicted_components (int): q^(k - rank)
        condition1 (bool): 1, X, f_3..f_k independent and every g_i has a linear term
        condition2 (bool): f_3..f_k independent and some j >= 2 has c_{i,j} != 0 for all i
    """
    __slots__ = ('rank', 'predicted_components', 'condition1', 'condition2')

    def __init__(self, rank, predicted_components, condition1, condition2):
        self.rank = rank
        self.predicted_components = predicted_components
        self.condition1 = condition1
        self.condition2 = condition2

    @property
    def connected(self):
        return self.predicted_components == 1

    def as_dict(self):
        return {slot: getattr(self, slot) for slot in self.__slots__}

    def __repr__(self):
        return 'ConnectivityReport(rank=%d, components=%d)' % (self.rank, self.predicted_components)


def connectivity_rank(spec):
    """Component count predicted from the rank of the v_i.

    Raises:
        HypothesisViolated: d_g is not in [1, p)
    """
    _require_degrees(spec, "Theorem 5.4")
    field = spec.field
    q, k, d_g = field.q, spec.k, spec.d_g

    def flatten(components):
        row = []
        for poly in components:
            row.extend(_padded(poly, q))
        return row

    zero = Poly(field)
    one = Poly(field, [1])
    x = Poly.monomial(field, 1)
    vectors = [
        flatten([one] + [zero] * (d_g - 1)),
        flatten([x] + [zero] * (d_g - 1)),
    ]
    for i, f in enumerate(spec.fs, 3):
        vectors.append(flatten([f.scale(spec.c(i, j)) for j in range(1, d_g + 1)]))
    rank = _rank(field, vectors)

    fs_rows = [_padded(f, q) for f in spec.fs]
    linear_terms = all(spec.c(i, 1) for i in range(3, k + 1))
    condition1 = linear_terms and _rank(field, [_padded(one, q), _padded(x, q)] + fs_rows) == k
    common_j = any(all(spec.c(i, j) for i in range(3, k + 1)) for j in range(2, d_g + 1))
    condition2 = common_j and _rank(field, fs_rows) == k - 2

    report = ConnectivityReport(rank, q ** (k - rank), condition1, condition2)
    logger.info("%r: rank %d, %d predicted components", spec, rank, report.predicted_components)
    return report


def connectivity_check(spec, vertex_cap=DEFAULT_VERTEX_CAP, work_cap=spectral.DEFAULT_WORK_CAP,
        executor=None, **sweep_kwargs):
    """q^(k-rank) == BFS component count == multiplicity of q(q-1)."""
    report = connectivity_rank(spec)
    found = components(build_s_graph(spec, vertex_cap=vertex_cap).graph())
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    holds = report.predicted_components == found.count
    if spectrum.exhaustive:
        holds = holds and spectrum.components == found.count
    if report.condition1 or report.condition2:
        holds = holds and found.count == 1
    return Verdict.check('connectivity(%r)' % spec, holds,
        computed={'bfs': found.count, 'multiplicity': spectrum.components, 'sizes': found.sizes[:8]},
        predicted=report.predicted_components,
        rank=report.rank, condition1=report.condition1, condition2=report.condition2)


# Cubic g: Lemma 6.1, Theorems 3 and 4
# ------------------------------------

def _classify(spec, mq, work_cap, executor):
    q = spec.q
    analyzer = WAnalyzer(spec)
    tally = collections.Counter()
    violations = []
    # T_w depends on (w_3, ..., w_k) only.
    roots = {}
    for w, value in spectral.iter_eigenvalues(spec, work_cap=work_cap, executor=executor):
        tail = w[2:]
        if tail not in roots:
            roots[tail] = analyzer.analyze(w).t_w
        t_w = roots[tail]
        if value == q * (t_w - 1):
            tally['exact'] += 1
        elif value.real_embed() <= (q - t_w) * mq.numeric + TOLERANCE:
            tally['bounded'] += 1
        else:
            violations.append(list(w))
    return tally, violations


def classify_cubic(spec, mq=None, work_cap=spectral.DEFAULT_WORK_CAP, mq_cap=DEFAULT_MQ_MAX_ORDER,
        executor=None):
    """Every lambda_w is q(T_w - 1) exactly, or at most (q - T_w) M_q.

    Raises:
        HypothesisViolated: q even, q != 2 mod 3, or some g_i != X^3
    """
    field = spec.field
    _require_cubic_field(field.q, "Lemma 6.1")
    cube = Poly.monomial(field, 3)
    for i, g in enumerate(spec.gs, 3):
        if g != cube:
            raise HypothesisViolated("Lemma 6.1 needs g_%d = X^3, got %r" % (i, g))
    if mq is None:
        mq = compute_mq(field, max_order=mq_cap, executor=executor)
    tally, violations = _classify(spec, mq, work_cap, executor)
    return Verdict.check('lemma61(%r)' % spec, not violations,
        computed=dict(tally, violations=len(violations)),
        predicted={'violations': 0},
        M_q=mq.numeric, first_violations=violations[:10])


def _exact_max(first, second):
    return first if first.real_embed() >= second.real_embed() else second


def verify_theorem3(q, k, work_cap=spectral.DEFAULT_WORK_CAP, mq_cap=DEFAULT_MQ_MAX_ORDER,
        executor=None, **sweep_kwargs):
    """lambda_2(S(k,q; X^2, X^3, ..., X^(k-1), X^3)) == max{q(k-3), (q-1)M_q}.

    Raises:
        HypothesisViolated: q not an odd prime power = 2 mod 3, or k outside [4, q+1]
        SizeExceeded: the sweep exceeds work_cap
    """
    _require_cubic_field(q, "Theorem 3")
    if not 4 <= k <= q + 1:
        raise HypothesisViolated("Theorem 3 needs 4 <= k <= q + 1 = %d, got %d" % (q + 1, k))
    field = field_of_order(q)
    spec = theorem3_spec(field, k)
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    mq = compute_mq(field, max_order=mq_cap, executor=executor)

    lambda2 = spectral.second_eigenvalue(spectrum)
    predicted = _exact_max(CycInt.integer(field.p, q * (k - 3)), mq.value * (q - 1))
    close = abs(lambda2.numeric - predicted.real_embed()) <= TOLERANCE
    if spectrum.exhaustive:
        holds = lambda2.exact == predicted and close
        strength = 'equality'
    else:
        holds = lambda2.numeric <= predicted.real_embed() + TOLERANCE
        strength = 'lower-bound witnessed'
    wenger = q * (k - 2)
    return Verdict.check('theorem3(q=%d, k=%d)' % (q, k), holds,
        computed=lambda2.exact, predicted=predicted,
        claim_strength=strength,
        M_q=mq.numeric,
        wenger_lambda2=wenger,
        below_wenger=lambda2.numeric < wenger - TOLERANCE,
        large_k_regime=(q - 1) * mq.numeric <= q * (k - 3) + TOLERANCE,
        ramanujan=spectral.is_ramanujan(spectrum))


def verify_theorem4(q, k, work_cap=spectral.DEFAULT_WORK_CAP, mq_cap=DEFAULT_MQ_MAX_ORDER,
        executor=None, **sweep_kwargs):
    """lambda_2(S(k,q; X^p, X^3, ..., X^(p^(k-2)), X^3)) <= max{q(p^(k-3)-1), (q-1)M_q}.

    Raises:
        HypothesisViolated: q not an odd prime power = 2 mod 3, or k outside [3, e+2]
        SizeExceeded: the sweep exceeds work_cap
    """
    p, e = _require_cubic_field(q, "Theorem 4")
    if not 3 <= k <= e + 2:
        raise HypothesisViolated("Theorem 4 needs 3 <= k <= e + 2 = %d, got %d" % (e + 2, k))
    field = field_of_order(q)
    spec = theorem4_spec(field, k)
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    mq = compute_mq(field, max_order=mq_cap, executor=executor)

    lambda2 = spectral.second_eigenvalue(spectrum)
    bound = max(q * (p ** (k - 3) - 1), (q - 1) * mq.numeric)
    return Verdict.check('theorem4(q=%d, k=%d)' % (q, k), lambda2.numeric <= bound + TOLERANCE,
        computed=lambda2.exact, predicted=bound,
        M_q=mq.numeric, exhaustive=spectrum.exhaustive, spec=spec.as_dict())


# Remarks
# -------

def remark1_witness(q, k=3, work_cap=spectral.DEFAULT_WORK_CAP, executor=None, **sweep_kwargs):
    """lambda_min(S(3,q; X^2, X^3)) < -q, or the same for S(4,q; X^2, X^3, X^3, X^3)."""
    if not is_prime(q) or q < 5:
        raise HypothesisViolated("the non-bipartite witness is stated for primes q >= 5, got %d" % q)
    spec = remark1_spec(field_of_order(q), k)
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    bottom = spectrum.bottom
    return Verdict.check('remark1(q=%d, k=%d)' % (q, k), spectral.nonbipartite_witness(spectrum),
        computed=bottom.value, predicted='< %d' % -q,
        witness_w=list(bottom.witness_w), margin=bottom.numeric + q)


def remark2_bound(q, k, n, work_cap=spectral.DEFAULT_WORK_CAP, executor=None):
    """lambda_2 <= max{q(k-3), 2n(q-1)sqrt(q)} for g_i = X^(2n+1), with the per-w classification.

    Raises:
        HypothesisViolated: q even, q = 1 mod (2n+1), gcd(2n+1, q) > 1, or k outside [3, q+1]
    """
    m = 2 * n + 1
    if n < 1:
        raise HypothesisViolated("Remark 2 needs n >= 1, got %d" % n)
    if prime_power(q) is None or q % 2 == 0:
        raise HypothesisViolated("Remark 2 needs an odd prime power q, got %d" % q)
    if q % m == 1:
        raise HypothesisViolated("Remark 2 needs q != 1 mod %d, got %d" % (m, q))
    if math.gcd(m, q) != 1:
        raise HypothesisViolated("Remark 2 needs gcd(%d, q) = 1, got q = %d" % (m, q))
    if not 3 <= k <= q + 1:
        raise HypothesisViolated("Remark 2 needs 3 <= k <= q + 1 = %d, got %d" % (q + 1, k))
    if m > q - 1:
        raise HypothesisViolated("X^%d has degree above q - 1 = %d" % (m, q - 1))

    field = field_of_order(q)
    spec = remark2_spec(field, k, n)
    rows = spectral.eigenvalue_rows(spec, work_cap=work_cap, executor=executor)
    spectrum = spectral.spectrum_from_rows(spec, rows)
    lambda2 = spectral.second_eigenvalue(spectrum)
    bound = max(q * (k - 3), 2 * n * (q - 1) * math.sqrt(q))

    analyzer = WAnalyzer(spec)
    roots = {}
    failures = 0
    for w, value in spectral.iter_eigenvalues(spec, rows=rows):
        tail = w[2:]
        if tail not in roots:
            roots[tail] = analyzer.analyze(w).t_w
        n_w = roots[tail]
        if value != q * (n_w - 1) and value.real_embed() > 2 * n * (q - n_w) * math.sqrt(q) + TOLERANCE:
            failures += 1
    holds = lambda2.numeric <= bound + TOLERANCE and failures == 0
    return Verdict.check('remark2(q=%d, k=%d, n=%d)' % (q, k, n), holds,
        computed=lambda2.exact, predicted=bound,
        classification_violations=failures,
        equals_q_k_minus_3=lambda2.exact == q * (k - 3))


def mq_scan(qmax, mq_cap=DEFAULT_MQ_MAX_ORDER, extra=(), executor=None):
    """2 sqrt(q) - 2 <= M_q <= 2 sqrt(q) for odd prime powers q = 2 mod 3 up to qmax."""
    orders = [q for q in range(3, qmax + 1) if prime_power(q) and q % 2 and q % 3 == 2]
    orders.extend(q for q in extra if q not in orders)
    verdicts = []
    for q in orders:
        mq = compute_mq(field_of_order(q), max_order=mq_cap, executor=executor)
        weil = 2 * math.sqrt(q)
        holds = weil - 2 - TOLERANCE <= mq.numeric <= weil + TOLERANCE
        verdicts.append(Verdict.check('remark3(q=%d)' % q, holds,
            computed=mq.numeric, predicted=[weil - 2, weil],
            argmax=list(mq.argmax),
            weil_ratio=mq.numeric / weil,
            tight=abs(mq.numeric - weil) <= TOLERANCE))
    return verdicts


def cover_check(spec_k, spec_k1, work_cap=spectral.DEFAULT_WORK_CAP, mq_cap=DEFAULT_MQ_MAX_ORDER,
        executor=None):
    """The spectrum of S(k,q) sits inside that of S(k+1,q), with lambda_2 monotone.

    Raises:
        SpecMismatch: spec_k1 does not extend spec_k by one (f, g) pair
    """
    if spec_k1.field != spec_k.field or spec_k1.k != spec_k.k + 1 or spec_k1.truncate(spec_k.k) != spec_k:
        raise SpecMismatch("%r does not extend %r by one (f, g) pair" % (spec_k1, spec_k))
    q = spec_k.q
    base_rows = spectral.eigenvalue_rows(spec_k, work_cap=work_cap, executor=executor)
    cover_rows = spectral.eigenvalue_rows(spec_k1, work_cap=work_cap, executor=executor)
    base = spectral.spectrum_from_rows(spec_k, base_rows)
    cover = spectral.spectrum_from_rows(spec_k1, cover_rows)

    base_counts = base.multiset()
    cover_counts = cover.multiset()
    contained = all(cover_counts[value] >= m for value, m in base_counts.items())
    # w = (w', 0) has the same canonical index as w'.
    projection = bool(np.array_equal(cover_rows[:base_rows.shape[0]], base_rows))
    base_l2 = spectral.second_eigenvalue(base)
    cover_l2 = spectral.second_eigenvalue(cover)
    monotone = cover_l2.numeric >= base_l2.numeric - TOLERANCE

    details = {
        'projection': projection,
        'lambda2_equal': cover_l2.exact == base_l2.exact,
        'note': "containment is checked base-into-cover; the opposite inclusion "
            "cannot hold since S(k+1,q) has q times as many eigenvalues",
    }
    if _is_theorem3_shaped(spec_k1) and q % 2 and q % 3 == 2 and spec_k.k >= 4:
        mq = compute_mq(spec_k.field, max_order=mq_cap, executor=executor)
        details['equality_condition'] = spec_k.k < (q - 1) * mq.numeric / q + 2
    equality = not details.get('equality_condition') or details['lambda2_equal']
    return Verdict.check('cover(%r -> %r)' % (spec_k, spec_k1), contained and monotone and projection and equality,
        computed=cover_l2.exact, predicted=base_l2.exact, **details)


# Bipartite and combinatorial checks
# ----------------------------------

def distance_two_correspondence(g, side):
    """Eigenvalues mu of the distance-two graph are theta^2 - d for theta >= 0 in g.

    Raises:
        HypothesisViolated: g is not regular, or has 4-cycles
    """
    d = g.regular_degree
    if d is None:
        raise HypothesisViolated("the distance-two correspondence needs a regular graph")
    square = distance_two(g, side)
    if not square.meta.get('four_cycle_free'):
        raise HypothesisViolated("%r contains 4-cycles" % g)
    if g.n != 2 * square.n:
        raise HypothesisViolated("the distance-two correspondence needs sides of equal size")
    theta = spectral.spectrum_dense(g)[:square.n]
    mu = spectral.spectrum_dense(square)
    predicted = np.sort(theta ** 2 - d)[::-1]
    error = float(np.max(np.abs(np.sort(mu)[::-1] - predicted)))
    return Verdict.check('distance_two_correspondence(n=%d, side=%d)' % (g.n, side),
        error <= ORACLE_TOLERANCE, computed=error, predicted=ORACLE_TOLERANCE)


def oracle_check(spec, work_cap=spectral.DEFAULT_WORK_CAP, vertex_cap=DEFAULT_VERTEX_CAP, executor=None):
    """Character-sum spectrum against the dense eigensolver, entrywise."""
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor)
    dense = spectral.spectrum_dense(build_s_graph(spec, vertex_cap=vertex_cap).graph())
    error = float(np.max(np.abs(spectrum.numeric_values() - dense)))
    return Verdict.check('oracle(%r)' % spec, error <= ORACLE_TOLERANCE,
        computed=error, predicted=ORACLE_TOLERANCE)


def cheeger_check(g, claim, expected=None):
    """cheeger_exact() with its sandwich, and an optional closed form for h."""
    result = spectral.cheeger_exact(g)
    holds = result.holds is not False
    if expected is not None:
        holds = holds and result.h == expected
    return Verdict.check(claim, holds, computed=str(result.h),
        predicted=None if expected is None else str(expected),
        lower=result.lower, upper=result.upper, lambda2=result.lambda2)


# Families
# --------

class FamilyReport(object):
    """Per-q rows of a family sweep, and the trend of lambda_2 / q^2.

    Attributes:
        rows (dict list): q, lambda2, gap, ratio, cheeger_lower, ...
        trend (Verdict): decreasing ratio over computed rows
    """

    def __init__(self, rows, trend):
        self.rows = rows
        self.trend = trend

    def as_dict(self):
        return {'rows': self.rows, 'trend': self.trend.as_dict()}


def family_row(spec, work_cap=spectral.DEFAULT_WORK_CAP, executor=None, **sweep_kwargs):
    field = spec.field
    q, p = field.q, field.p
    row = {
        'q': q,
        'dg_lt_p': 1 <= spec.d_g < p,
        'hypothesis_ok': 1 <= spec.d_g < p and spec.d_f >= 1,
    }
    if not row['hypothesis_ok']:
        row['verdict'] = HYPOTHESIS_VIOLATED
        return row
    row['condition1'] = connectivity_rank(spec).condition1
    spectrum = spectral.spectrum_formula(spec, work_cap=work_cap, executor=executor, **sweep_kwargs)
    lambda2 = spectral.second_eigenvalue(spectrum)
    row.update({
        'lambda2': lambda2.numeric,
        'gap': lambda2.gap,
        'ratio': lambda2.numeric / q ** 2,
        'cheeger_lower': lambda2.gap / 2,
        'bound': spec.d_f * (q - 1) + q * ((spec.d_g - 1) * math.sqrt(q) + 1),
        'components': spectrum.components,
        'exhaustive': spectrum.exhaustive,
        'verdict': PASS,
    })
    return row


def family_table(template, qs, work_cap=spectral.DEFAULT_WORK_CAP, executor=None, **sweep_kwargs):
    """Instantiate template at each q; flag a non-decreasing lambda_2 / q^2."""
    rows = []
    for q in qs:
        spec = template.instantiate(q)
        rows.append(family_row(spec, work_cap=work_cap, executor=executor, **sweep_kwargs))

    computed = [row for row in rows if row['verdict'] == PASS]
    ratios = [row['ratio'] for row in computed]
    name = 'family(%s)' % template
    if len(ratios) < 2:
        trend = Verdict(name, True, ratios, None, SKIPPED, {'reason': 'fewer than two computed rows'})
    else:
        decreasing = all(b < a for a, b in zip(ratios, ratios[1:]))
        trend = Verdict(name, True, [format_decimal(r) for r in ratios], 'decreasing',
            PASS if decreasing else FAIL)
    return FamilyReport(rows, trend)
