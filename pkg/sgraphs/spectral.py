# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Spectra of S(k,q).

The eigenvalue attached to the character w of (F_q^k, +) is

    lambda_w = sum over a != 0, u of zeta_p ** Tr(a w_1 + a u w_2 + sum_i g_i(a) f_i(u) w_i)

Tr is additive, so the exponent splits into per-coordinate traces that are
looked up from precomputed (a, u) grids; each lambda_w is then the
histogram of exponents mod p, an exact CycInt.
"""

import collections
import functools
import itertools
import logging
import math
from fractions import Fraction

import numpy as np
from scipy import linalg

from . import executors
from .charsum import CycInt, format_decimal
from .errors import Disconnected, InvariantViolation, SizeExceeded
from .graphs import decode_vectors

logger = logging.getLogger(__name__)


DEFAULT_WORK_CAP = 10 ** 9
EXHAUSTIVE_LIMIT = 10 ** 6
DEFAULT_SAMPLE = 10 ** 5
DENSE_MAX_ORDER = 4096
CHEEGER_MAX_ORDER = 24
TOLERANCE = 1e-9


class SweepTables(object):
    """(a, u) grids shared by every character of one spec.

    Attributes:
        spec (SGraphSpec): the graph parameters
        a (array): 1..q-1
        au (array): a * u, shape (q-1, q)
        products (array list): g_i(a) * f_i(u), shape (q-1, q) each
        first (array): Tr(a * w_1) for every w_1, shape (q, q-1)
    """

    def __init__(self, spec):
        field = spec.field
        q = field.q
        self.spec = spec
        self.a = np.arange(1, q, dtype=np.int64)
        u = np.arange(q, dtype=np.int64)
        self.au = field.mul_array(self.a[:, None], u[None, :])
        self.products = [
            field.mul_array(g.evaluate_array(self.a)[:, None], f.evaluate_array(u)[None, :])
            for f, g in zip(spec.fs, spec.gs)
        ]
        self.first = field.trace_array(field.mul_array(u[:, None], self.a[None, :]))

    def tail_exponents(self, tail):
        """Tr(a u w_2 + sum_i g_i(a) f_i(u) w_i), unreduced, for tail = (w_2, ..., w_k)."""
        field = self.spec.field
        total = field.trace_array(field.mul_array(self.au, int(tail[0])))
        for product, w_i in zip(self.products, tail[1:]):
            if w_i:
                total = total + field.trace_array(field.mul_array(product, int(w_i)))
        return total

    def rows_for_tails(self, tail_start, tail_stop):
        """Coefficient rows of lambda_w for w = tail * q + w_1, all w_1, tails in range."""
        spec = self.spec
        p, q = spec.field.p, spec.field.q
        offsets = (np.arange(q, dtype=np.int64) * p)[:, None, None]
        tails = decode_vectors(spec.field, spec.k - 1, np.arange(tail_start, tail_stop))
        rows = []
        for tail in tails:
            base = self.tail_exponents(tail)
            exponents = (base[None, :, :] + self.first[:, :, None]) % p
            counts = np.bincount((exponents + offsets).ravel(), minlength=q * p).reshape(q, p)
            rows.append(counts[:, :p - 1] - counts[:, p - 1:p])
        if not rows:
            return np.zeros((0, p - 1), dtype=np.int64)
        return np.concatenate(rows, axis=0)

    def row_for(self, w):
        spec = self.spec
        field = spec.field
        p = field.p
        exponents = self.tail_exponents(w[1:]) + self.first[int(w[0])][:, None]
        counts = np.bincount((exponents % p).ravel(), minlength=p)
        return counts[:p - 1] - counts[p - 1]


@functools.lru_cache(maxsize=8)
def sweep_tables(spec):
    return SweepTables(spec)


def _as_encodings(w):
    return [int(x) for x in w]


def eigenvalue_at(spec, w):
    """Exact lambda_w for one character w (k field elements or encodings)."""
    w = _as_encodings(w)
    if len(w) != spec.k:
        raise ValueError("character %r does not have %d coordinates" % (w, spec.k))
    value = CycInt(spec.field.p, sweep_tables(spec).row_for(w))
    if not value.is_real():
        raise InvariantViolation("lambda_%r = %r is not real" % (w, value))
    return value


def _rows_chunk(spec, tail_start, tail_stop):
    return sweep_tables(spec).rows_for_tails(tail_start, tail_stop)


def _sample_chunk(spec, w_indices):
    tables = sweep_tables(spec)
    ws = decode_vectors(spec.field, spec.k, w_indices)
    return np.stack([tables.row_for(w) for w in ws]) if len(ws) else np.zeros((0, spec.field.p - 1), dtype=np.int64)


def _group(rows, w_indices):
    """(coeffs, count, smallest w) triples for one chunk of rows.

    w_indices must be ascending, so that first occurrences are minimal.
    """
    if rows.shape[0] == 0:
        return []
    unique, first, counts = np.unique(rows, axis=0, return_index=True, return_counts=True)
    return [
        (tuple(int(c) for c in row), int(count), int(w_indices[i]))
        for row, i, count in zip(unique, first, counts)
    ]


def _grouped_rows_chunk(spec, tail_start, tail_stop):
    q = spec.field.q
    rows = _rows_chunk(spec, tail_start, tail_stop)
    return _group(rows, np.arange(tail_start * q, tail_stop * q, dtype=np.int64))


def _grouped_sample_chunk(spec, w_indices):
    return _group(_sample_chunk(spec, w_indices), np.asarray(w_indices, dtype=np.int64))


def sweep_cost(spec, exhaustive_limit=EXHAUSTIVE_LIMIT, sample=DEFAULT_SAMPLE):
    """(elementary character evaluations, exhaustive?) for a full sweep."""
    q, k = spec.q, spec.k
    if q ** k <= exhaustive_limit:
        return q ** (k + 2), True
    return min(sample, q ** k) * q * q, False


def check_work(spec, work_cap=DEFAULT_WORK_CAP, exhaustive_limit=EXHAUSTIVE_LIMIT, sample=DEFAULT_SAMPLE):
    cost, exhaustive = sweep_cost(spec, exhaustive_limit, sample)
    if cost > work_cap:
        raise SizeExceeded("character-sum work", cost, work_cap)
    return cost, exhaustive


def eigenvalue_rows(spec, work_cap=DEFAULT_WORK_CAP, executor=None):
    """Coefficient rows of lambda_w for every w, indexed by canonical w.

    Raises:
        SizeExceeded: q**(k+2) is above work_cap, or q**k above the
            exhaustive-sweep limit
    """
    q, k = spec.q, spec.k
    if q ** k > EXHAUSTIVE_LIMIT:
        raise SizeExceeded("exhaustive sweep size", q ** k, EXHAUSTIVE_LIMIT)
    check_work(spec, work_cap)
    executor = executor or executors.SerialExecutor()
    tasks = [
        executors.Task('rows[%d:%d]' % bounds, _rows_chunk, (spec,) + bounds)
        for bounds in executors.split_range(q ** (k - 1), executor.jobs * 4)
    ]
    return np.concatenate(executor.map_tasks(tasks), axis=0)


def iter_eigenvalues(spec, work_cap=DEFAULT_WORK_CAP, executor=None, rows=None):
    """Yield (w coordinates, lambda_w) for every w in canonical order."""
    if rows is None:
        rows = eigenvalue_rows(spec, work_cap=work_cap, executor=executor)
    p = spec.field.p
    ws = decode_vectors(spec.field, spec.k, np.arange(rows.shape[0]))
    for w, row in zip(ws, rows):
        yield tuple(int(x) for x in w), CycInt(p, row)


class SpectrumEntry(object):
    """One distinct eigenvalue.

    Attributes:
        value (CycInt): exact eigenvalue, real
        numeric (float): real embedding
        multiplicity (int): number of characters w attaining it
        witness_w (int tuple): smallest such w, as coordinates
    """
    __slots__ = ('value', 'numeric', 'multiplicity', 'witness_w')

    def __init__(self, value, multiplicity, witness_w=None):
        self.value = value
        self.numeric = value.real_embed()
        self.multiplicity = multiplicity
        self.witness_w = witness_w

    def as_dict(self):
        return {
            'coeffs': list(self.value.coeffs),
            'value': format_decimal(self.numeric),
            'multiplicity': self.multiplicity,
            'witness_w': list(self.witness_w) if self.witness_w is not None else None,
        }

    def __repr__(self):
        return 'SpectrumEntry(%.9g, x%d)' % (self.numeric, self.multiplicity)


class Spectrum(object):
    """The multiset {lambda_w}, sorted by numeric value, descending.

    Attributes:
        q, k (int): graph parameters
        degree (int): q(q-1)
        order (int): q**k
        entries (SpectrumEntry list): distinct eigenvalues
        exhaustive (bool): False when only a sample of characters was swept
    """

    def __init__(self, q, k, p, entries, exhaustive=True):
        self.q = q
        self.k = k
        self.p = p
        self.degree = q * (q - 1)
        self.order = q ** k
        self.exhaustive = exhaustive
        self.entries = sorted(entries, key=lambda entry: entry.value.sort_key())

    @property
    def swept(self):
        return sum(entry.multiplicity for entry in self.entries)

    @property
    def top(self):
        return self.entries[0]

    @property
    def bottom(self):
        return self.entries[-1]

    @property
    def components(self):
        """Multiplicity of q(q-1): the number of connected components."""
        for entry in self.entries:
            if entry.value == self.degree:
                return entry.multiplicity
        return 0

    def multiset(self):
        return collections.Counter({entry.value: entry.multiplicity for entry in self.entries})

    def numeric_values(self):
        """All eigenvalues with multiplicity, descending."""
        return np.repeat([entry.numeric for entry in self.entries],
            [entry.multiplicity for entry in self.entries])

    def moments(self):
        """(sum m*lambda, sum m*lambda^2), exact."""
        m1 = CycInt.zero(self.p)
        m2 = CycInt.zero(self.p)
        for entry in self.entries:
            m1 = m1 + entry.value * entry.multiplicity
            m2 = m2 + entry.value * entry.value * entry.multiplicity
        return m1, m2

    def check_invariants(self):
        """Top value, trace and edge-count identities; exhaustive spectra only."""
        if not self.exhaustive:
            return
        if self.swept != self.order:
            raise InvariantViolation("multiplicities sum to %d, not %d" % (self.swept, self.order))
        if self.top.value != self.degree:
            raise InvariantViolation("largest eigenvalue %r is not %d" % (self.top.value, self.degree))
        m1, m2 = self.moments()
        if m1 != 0:
            raise InvariantViolation("trace identity fails: sum m*lambda = %r" % (m1,))
        if m2 != self.order * self.degree:
            raise InvariantViolation("edge identity fails: sum m*lambda^2 = %r" % (m2,))

    def as_dict(self):
        m1, m2 = self.moments()
        return {
            'q': self.q,
            'k': self.k,
            'degree': self.degree,
            'exhaustive': self.exhaustive,
            'entries': [entry.as_dict() for entry in self.entries],
            'moments': {'m1': list(m1.coeffs), 'm2': list(m2.coeffs)},
            'components': self.components,
        }

    def __repr__(self):
        return 'Spectrum(q=%d, k=%d, %d distinct values)' % (self.q, self.k, len(self.entries))


def spectrum_formula(spec, work_cap=DEFAULT_WORK_CAP, executor=None, sample=DEFAULT_SAMPLE,
        seed=0, exhaustive_limit=EXHAUSTIVE_LIMIT):
    """Complete spectrum of S(k,q) from the character sums.

    Sweeps every w when q**k <= exhaustive_limit, otherwise `sample` w drawn
    uniformly (seeded); sampled spectra have exhaustive=False and only
    witness lower bounds on lambda_2.

    Raises:
        SizeExceeded: the estimated work is above work_cap
        InvariantViolation: realness, trace or edge-count identities fail
    """
    field = spec.field
    q, k, p = field.q, spec.k, field.p
    cost, exhaustive = check_work(spec, work_cap, exhaustive_limit, sample)
    executor = executor or executors.SerialExecutor()
    logger.info("Sweeping %r: %d character evaluations, %s", spec, cost,
        'exhaustive' if exhaustive else 'sampled')

    if exhaustive:
        tasks = [
            executors.Task('spectrum[%d:%d]' % bounds, _grouped_rows_chunk, (spec,) + bounds)
            for bounds in executors.split_range(q ** (k - 1), executor.jobs * 4)
        ]
    else:
        logger.warning("q^k = %d exceeds %d: sampling %d characters, lambda_2 is only a lower bound",
            q ** k, exhaustive_limit, sample)
        rng = np.random.default_rng(seed)
        ws = np.unique(np.concatenate([[0], rng.integers(0, q ** k, size=sample, dtype=np.int64)]))
        tasks = [
            executors.Task('sample[%d:%d]' % (start, stop), _grouped_sample_chunk, (spec, ws[start:stop]))
            for start, stop in executors.split_range(ws.size, executor.jobs * 4)
        ]

    merged = {}
    for chunk in executor.map_tasks(tasks):
        for coeffs, count, witness in chunk:
            if coeffs in merged:
                merged[coeffs][0] += count
                merged[coeffs][1] = min(merged[coeffs][1], witness)
            else:
                merged[coeffs] = [count, witness]

    entries = []
    for coeffs, (count, witness) in merged.items():
        value = CycInt(p, coeffs)
        if not value.is_real():
            raise InvariantViolation("eigenvalue %r of %r is not real" % (value, spec))
        witness_w = tuple(int(x) for x in decode_vectors(field, k, [witness])[0])
        entries.append(SpectrumEntry(value, count, witness_w))

    spectrum = Spectrum(q, k, p, entries, exhaustive=exhaustive)
    spectrum.check_invariants()
    return spectrum


def spectrum_from_rows(spec, rows):
    """Exhaustive Spectrum from eigenvalue_rows() output."""
    field = spec.field
    entries = []
    for coeffs, count, witness in _group(rows, np.arange(rows.shape[0], dtype=np.int64)):
        witness_w = tuple(int(x) for x in decode_vectors(field, spec.k, [witness])[0])
        entries.append(SpectrumEntry(CycInt(field.p, coeffs), count, witness_w))
    spectrum = Spectrum(field.q, spec.k, field.p, entries)
    spectrum.check_invariants()
    return spectrum


def spectrum_dense(g, max_order=DENSE_MAX_ORDER):
    """All adjacency eigenvalues of g, descending, by a dense symmetric solver.

    Raises:
        SizeExceeded: g has more than max_order vertices
    """
    if g.n > max_order:
        raise SizeExceeded("dense eigensolve order", g.n, max_order)
    values = linalg.eigvalsh(g.dense())
    return values[::-1]


class SecondEigenvalue(object):
    """lambda_2 and the spectral gap.

    Attributes:
        numeric (float): lambda_2
        exact (CycInt or None): exact value, when computed from a Spectrum
        gap (float): d - lambda_2
        exact_gap (CycInt or None): exact gap
    """
    __slots__ = ('numeric', 'exact', 'gap', 'exact_gap')

    def __init__(self, numeric, exact, gap, exact_gap=None):
        self.numeric = numeric
        self.exact = exact
        self.gap = gap
        self.exact_gap = exact_gap

    def as_dict(self):
        return {
            'lambda2': format_decimal(self.numeric),
            'coeffs': list(self.exact.coeffs) if self.exact is not None else None,
            'gap': format_decimal(self.gap),
        }

    def __repr__(self):
        return 'SecondEigenvalue(%.9g, gap=%.9g)' % (self.numeric, self.gap)


def second_eigenvalue(s):
    """lambda_2 of a Spectrum, or of a descending sequence of reals.

    When the largest value has multiplicity above one, lambda_2 equals it
    and the gap is zero.
    """
    if isinstance(s, Spectrum):
        top = s.top
        entry = top if top.multiplicity > 1 or len(s.entries) == 1 else s.entries[1]
        exact_gap = CycInt.integer(s.p, s.degree) - entry.value
        return SecondEigenvalue(entry.numeric, entry.value, s.degree - entry.numeric, exact_gap)
    values = np.sort(np.asarray(s, dtype=float))[::-1]
    lambda2 = values[1] if values.size > 1 else values[0]
    return SecondEigenvalue(float(lambda2), None, float(values[0] - lambda2))


def is_ramanujan(s, tolerance=TOLERANCE):
    """lambda_2 <= 2 sqrt(d - 1), for a connected regular graph.

    Raises:
        Disconnected: the largest eigenvalue is repeated
    """
    if isinstance(s, Spectrum):
        if s.components > 1:
            raise Disconnected("S(%d,%d) has %d components" % (s.k, s.q, s.components))
        d = s.degree
    else:
        values = np.sort(np.asarray(s, dtype=float))[::-1]
        if values.size > 1 and values[1] >= values[0] - tolerance:
            raise Disconnected("largest eigenvalue %.9g is repeated" % values[0])
        d = values[0]
    lambda2 = second_eigenvalue(s).numeric
    return lambda2 <= 2 * math.sqrt(d - 1) + tolerance


def nonbipartite_witness(spectrum, tolerance=TOLERANCE):
    """Whether lambda_min < -q strictly.

    The distance-two graph of a q-regular bipartite graph has every
    eigenvalue >= -q, so a witness rules S out as such a graph.
    """
    return spectrum.bottom.numeric + spectrum.q < -tolerance


class CheegerResult(object):
    """Exact edge-isoperimetric number with its spectral sandwich.

    Attributes:
        h (Fraction): min |boundary(A)| / |A| over 0 < |A| <= n/2
        argmin (int tuple): a minimising A
        lambda2 (float): from the dense oracle
        degree (int or None): common degree, None if irregular
        connected (bool): whether lambda_2 < d
        lower, upper (float or None): (d - lambda_2)/2 and sqrt(d^2 - lambda_2^2)
        holds (bool or None): lower <= h <= upper; None when not applicable
    """
    __slots__ = ('h', 'argmin', 'lambda2', 'degree', 'connected', 'lower', 'upper', 'holds')

    def __init__(self, h, argmin, lambda2, degree, connected, lower, upper, holds):
        self.h = h
        self.argmin = argmin
        self.lambda2 = lambda2
        self.degree = degree
        self.connected = connected
        self.lower = lower
        self.upper = upper
        self.holds = holds

    def as_dict(self):
        return {
            'h': str(self.h),
            'argmin': list(self.argmin),
            'lambda2': format_decimal(self.lambda2),
            'lower': None if self.lower is None else format_decimal(self.lower),
            'upper': None if self.upper is None else format_decimal(self.upper),
            'holds': self.holds,
        }

    def __repr__(self):
        return 'CheegerResult(h=%s, lower=%r, upper=%r)' % (self.h, self.lower, self.upper)


def _popcount(x):
    return bin(x).count('1')


def cheeger_exact(g, max_order=CHEEGER_MAX_ORDER, tolerance=TOLERANCE):
    """Exhaustive Cheeger constant.

    Raises:
        SizeExceeded: g has more than max_order vertices
        InvariantViolation: a connected regular g violates the sandwich
    """
    n = g.n
    if n > max_order:
        raise SizeExceeded("Cheeger enumeration order", n, max_order)
    masks = [sum(1 << int(v) for v in g.neighbours(u)) for u in range(n)]

    best = None
    best_set = ()
    for size in range(1, n // 2 + 1):
        for subset in itertools.combinations(range(n), size):
            inside = 0
            for v in subset:
                inside |= 1 << v
            boundary = sum(_popcount(masks[v] & ~inside) for v in subset)
            ratio = Fraction(boundary, size)
            if best is None or ratio < best:
                best, best_set = ratio, subset
        if best == 0:
            break
    if best is None:
        best = Fraction(0)

    values = spectrum_dense(g)
    lambda2 = second_eigenvalue(values).numeric if n > 1 else float(values[0])
    d = g.regular_degree
    lower = upper = holds = None
    connected = n > 0 and lambda2 < values[0] - tolerance
    if d is not None:
        lower = (d - lambda2) / 2
        upper = math.sqrt(max(d * d - lambda2 * lambda2, 0.0))
        if connected:
            holds = lower - tolerance <= best <= upper + tolerance
            if not holds:
                raise InvariantViolation("Cheeger sandwich fails: %.9g <= %s <= %.9g" % (lower, best, upper))
    return CheegerResult(best, best_set, lambda2, d, connected, lower, upper, holds)
