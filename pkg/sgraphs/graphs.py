# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Graph constructions: S(k,q) Cayley graphs, bipartite graphs BGamma_k,
and distance-two graphs.

Vertices of graphs on F_q^k are the canonical encodings
sum(c_i * q**(i-1)) of their coordinate vectors, c_1 least significant.
"""

import json
import logging

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .charsum import Poly
from .errors import (
    FieldMismatch, InvalidSpec, InvariantViolation, NotBipartite, OddnessViolation, SizeExceeded,
)

logger = logging.getLogger(__name__)


DEFAULT_VERTEX_CAP = 10 ** 6

POINTS = 0
LINES = 1
SIDE_NAMES = {'points': POINTS, 'lines': LINES}

# Encoded neighbour pairs per vectorised block.
_BLOCK = 1 << 22


def encode_vectors(field, coords):
    """Canonical indices of coordinate rows (last axis = coordinates)."""
    coords = np.asarray(coords, dtype=np.int64)
    weights = field.q ** np.arange(coords.shape[-1], dtype=np.int64)
    return coords @ weights


def decode_vectors(field, k, indices):
    indices = np.asarray(indices, dtype=np.int64)
    return np.stack([(indices // field.q ** i) % field.q for i in range(k)], axis=-1)


class Graph(object):
    """A simple undirected graph on vertices 0..n-1.

    Attributes:
        n (int): vertex count
        indptr, indices (numpy arrays): CSR layout; the neighbours of v are
            indices[indptr[v]:indptr[v+1]], sorted ascending
        sides ((array, array) or None): the two colour classes, when known
        meta (dict): construction notes (e.g. collapsed multi-adjacencies)
    """

    def __init__(self, n, indptr, indices, sides=None, meta=None, check=True):
        self.n = int(n)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.sides = sides
        self.meta = dict(meta or {})
        if check:
            self._check_simple()

    @classmethod
    def from_edge_arrays(cls, n, src, dst, **kwargs):
        """Build from directed pairs; both directions must be listed."""
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        keys = np.unique(src * n + dst)
        src, dst = keys // n, keys % n
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        return cls(n, indptr, dst, **kwargs)

    @classmethod
    def from_edges(cls, n, edges, **kwargs):
        edges = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        return cls.from_edge_arrays(n, src, dst, **kwargs)

    @classmethod
    def from_regular_array(cls, neighbours, **kwargs):
        neighbours = np.sort(np.asarray(neighbours, dtype=np.int64), axis=1)
        n, d = neighbours.shape
        indptr = np.arange(0, n * d + 1, d, dtype=np.int64)
        return cls(n, indptr, neighbours.ravel(), **kwargs)

    @classmethod
    def from_networkx(cls, nx_graph):
        """Import a networkx graph, relabelling nodes in sorted order."""
        nodes = sorted(nx_graph.nodes())
        position = {node: i for i, node in enumerate(nodes)}
        edges = [(position[u], position[v]) for u, v in nx_graph.edges()]
        return cls.from_edges(len(nodes), edges)

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def _check_simple(self):
        sources = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self.indptr))
        if np.any(sources == self.indices):
            raise InvariantViolation("graph has loops")
        for v in range(self.n):
            row = self.indices[self.indptr[v]:self.indptr[v + 1]]
            if row.size > 1 and np.any(np.diff(row) <= 0):
                raise InvariantViolation("neighbours of %d are not strictly sorted" % v)
        matrix = self.adjacency_matrix()
        if (matrix != matrix.T).nnz:
            raise InvariantViolation("adjacency is not symmetric")

    def neighbours(self, v):
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u, v):
        row = self.neighbours(u)
        pos = np.searchsorted(row, v)
        return bool(pos < row.size and row[pos] == v)

    def degrees(self):
        return np.diff(self.indptr)

    @property
    def regular_degree(self):
        """The common degree, or None for irregular graphs."""
        degrees = self.degrees()
        if degrees.size == 0 or np.any(degrees != degrees[0]):
            return None
        return int(degrees[0])

    @property
    def edge_count(self):
        return int(self.indices.size // 2)

    def edges(self):
        """Edges (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in self.neighbours(u):
                if u < v:
                    yield int(u), int(v)

    def adjacency_matrix(self):
        data = np.ones(self.indices.size, dtype=np.int64)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def dense(self):
        return self.adjacency_matrix().toarray().astype(float)

    def subgraph(self, vertices):
        """Induced subgraph, vertices relabelled in ascending order."""
        vertices = np.unique(np.asarray(vertices, dtype=np.int64))
        position = -np.ones(self.n, dtype=np.int64)
        position[vertices] = np.arange(vertices.size)
        edges = [
            (position[u], position[v]) for u, v in self.edges()
            if position[u] >= 0 and position[v] >= 0
        ]
        return Graph.from_edges(vertices.size, edges)

    def __repr__(self):
        return 'Graph(n=%d, edges=%d)' % (self.n, self.edge_count)


class Components(object):
    """Connected components.

    Attributes:
        count (int): number of components
        sizes (int list): component sizes, descending
        labels (numpy array): component label per vertex
    """
    __slots__ = ('count', 'sizes', 'labels')

    def __init__(self, count, sizes, labels):
        self.count = count
        self.sizes = sizes
        self.labels = labels

    def members(self, label):
        return np.nonzero(self.labels == label)[0]

    def __repr__(self):
        return 'Components(count=%d, sizes=%r)' % (self.count, self.sizes)


def components(g):
    count, labels = csgraph.connected_components(g.adjacency_matrix(), directed=False)
    sizes = sorted((int(s) for s in np.bincount(labels, minlength=count)), reverse=True)
    logger.info("%r: %d component(s)", g, count)
    return Components(int(count), sizes, labels)


# S(k,q)
# ------

class SGraphSpec(object):
    """Parameters of S(k,q; f_3, g_3, ..., f_k, g_k).

    Attributes:
        field (FiniteField): F_q
        k (int): dimension, at least 3
        fs (Poly tuple): f_3..f_k
        gs (Poly tuple): g_3..g_k
    """

    def __init__(self, field, k, fs, gs):
        fs = tuple(fs)
        gs = tuple(gs)
        if k < 3:
            raise InvalidSpec("k must be at least 3, got %d" % k)
        if len(fs) != k - 2 or len(gs) != k - 2:
            raise InvalidSpec("S(%d,q) needs %d f and %d g polynomials, got %d and %d"
                % (k, k - 2, k - 2, len(fs), len(gs)))
        for poly in fs + gs:
            if poly.field != field:
                raise FieldMismatch("%r is not over F_%d" % (poly, field.q))
        for i, g in enumerate(gs, 3):
            if not g.is_odd():
                raise OddnessViolation(
                    "g_%d = %r is not odd: g(-X) = -g(X) requires every even-degree "
                    "coefficient (including the constant) to be zero" % (i, g))
        self.field = field
        self.k = k
        self.fs = fs
        self.gs = gs

    @property
    def q(self):
        return self.field.q

    @property
    def degree(self):
        return self.q * (self.q - 1)

    @property
    def d_f(self):
        return max(f.degree for f in self.fs)

    @property
    def d_g(self):
        return max(g.degree for g in self.gs)

    def c(self, i, j):
        """Coefficient of X^j in g_i, 3 <= i <= k."""
        return self.gs[i - 3].coefficient(j)

    def extend(self, f, g):
        return SGraphSpec(self.field, self.k + 1, self.fs + (f,), self.gs + (g,))

    def truncate(self, k):
        return SGraphSpec(self.field, k, self.fs[:k - 2], self.gs[:k - 2])

    def as_dict(self):
        return {
            'p': self.field.p,
            'e': self.field.e,
            'k': self.k,
            'f': [f.as_list() for f in self.fs],
            'g': [g.as_list() for g in self.gs],
        }

    def __eq__(self, other):
        if not isinstance(other, SGraphSpec):
            return NotImplemented
        return (self.field, self.k, self.fs, self.gs) == (other.field, other.k, other.fs, other.gs)

    def __hash__(self):
        return hash((self.field, self.k, self.fs, self.gs))

    def __repr__(self):
        pairs = ', '.join('%r, %r' % pair for pair in zip(self.fs, self.gs))
        return 'S(%d,%d; %s)' % (self.k, self.q, pairs)


def make_spec(field, fs, gs):
    """Shorthand: polynomials given as ascending coefficient lists."""
    fs = [f if isinstance(f, Poly) else Poly(field, f) for f in fs]
    gs = [g if isinstance(g, Poly) else Poly(field, g) for g in gs]
    return SGraphSpec(field, len(fs) + 2, fs, gs)


def connection_set(spec):
    """The q(q-1) generators (a, au, g_3(a)f_3(u), ..., g_k(a)f_k(u)).

    Rows are ordered by a (1..q-1), then u (0..q-1).
    """
    field = spec.field
    q = field.q
    a = np.repeat(np.arange(1, q, dtype=np.int64), q)
    u = np.tile(np.arange(q, dtype=np.int64), q - 1)
    columns = [a, field.mul_array(a, u)]
    for f, g in zip(spec.fs, spec.gs):
        columns.append(field.mul_array(g.evaluate_array(a), f.evaluate_array(u)))
    return np.stack(columns, axis=1)


def is_adjacent(spec, a, b):
    """Adjacency of coordinate vectors a, b straight from the defining relations."""
    field = spec.field
    delta = field.sub(b[0], a[0])
    if delta == 0:
        return False
    u = field.mul(field.sub(b[1], a[1]), field.inv(delta))
    for i, (f, g) in enumerate(zip(spec.fs, spec.gs), 2):
        if field.sub(b[i], a[i]) != field.mul(g(delta), f(u)):
            return False
    return True


class SGraph(object):
    """S(k,q) as a Cayley graph of (F_q^k, +).

    Attributes:
        spec (SGraphSpec): parameters
        connection_set (numpy array): q(q-1) x k generator coordinates
    """

    def __init__(self, spec, vertex_cap=DEFAULT_VERTEX_CAP):
        self.spec = spec
        self.vertex_cap = vertex_cap
        self.connection_set = connection_set(spec)
        self._graph = None
        self._check_connection_set()

    @property
    def order(self):
        return self.spec.q ** self.spec.k

    def _check_connection_set(self):
        field = self.spec.field
        codes = encode_vectors(field, self.connection_set)
        if np.unique(codes).size != self.spec.degree:
            raise InvariantViolation("connection set of %r has collisions" % self.spec)
        if np.any(codes == 0):
            raise InvariantViolation("connection set of %r contains 0" % self.spec)
        negated = encode_vectors(field, field.neg_array(self.connection_set))
        if not np.array_equal(np.sort(codes), np.sort(negated)):
            raise InvariantViolation("connection set of %r is not symmetric" % self.spec)

    def graph(self):
        """The realised Graph, built on first use."""
        if self._graph is None:
            self._graph = self._realise()
        return self._graph

    def _realise(self):
        field = self.spec.field
        k = self.spec.k
        n = self.order
        d = self.spec.degree
        block = max(1, _BLOCK // (d * k))
        neighbours = np.empty((n, d), dtype=np.int64)
        generators = self.connection_set[None, :, :]
        for start in range(0, n, block):
            stop = min(n, start + block)
            coords = decode_vectors(field, k, np.arange(start, stop))[:, None, :]
            neighbours[start:stop] = encode_vectors(field, field.add_array(coords, generators))
        logger.info("Realised %r: %d vertices, degree %d", self.spec, n, d)
        return Graph.from_regular_array(neighbours, check=n <= 10 ** 4)

    def export_connection_set(self):
        lines = [' '.join(str(int(c)) for c in row) for row in self.connection_set]
        return ('\n'.join(lines) + '\n').encode('utf-8')

    def __repr__(self):
        return 'SGraph(%r)' % (self.spec,)


def build_s_graph(spec, vertex_cap=DEFAULT_VERTEX_CAP):
    """Construct S(k,q) as a Cayley graph.

    Raises:
        SizeExceeded: q**k is above vertex_cap
    """
    order = spec.q ** spec.k
    if order > vertex_cap:
        raise SizeExceeded("vertex count", order, vertex_cap)
    return SGraph(spec, vertex_cap=vertex_cap)


# BGamma_k
# --------

class MultiPoly(object):
    """A sparse polynomial in the variables p_1, l_1, p_2, l_2, ...

    Attributes:
        terms (tuple): (coefficient, exponent tuple) pairs; exponent j
            applies to p_{j//2 + 1} for even j, l_{j//2 + 1} for odd j.
    """

    def __init__(self, terms):
        self.terms = tuple((int(c), tuple(int(x) for x in exps)) for c, exps in terms)

    @classmethod
    def monomial(cls, coeff=1, **powers):
        """MultiPoly.monomial(p1=1, l1=2) == p_1 * l_1^2."""
        size = 0
        for name in powers:
            size = max(size, _variable_index(name) + 1)
        exps = [0] * size
        for name, power in powers.items():
            exps[_variable_index(name)] = power
        return cls([(coeff, exps)])

    @property
    def nvars(self):
        used = 0
        for _c, exps in self.terms:
            for j, x in enumerate(exps):
                if x:
                    used = max(used, j + 1)
        return used

    def evaluate_array(self, field, variables):
        total = np.zeros(np.shape(variables[0]), dtype=np.int64)
        for coeff, exps in self.terms:
            term = np.full(np.shape(variables[0]), coeff, dtype=np.int64)
            for j, power in enumerate(exps):
                if power:
                    term = field.mul_array(term, _pow_array(field, variables[j], power))
            total = field.add_array(total, term)
        return total

    def __repr__(self):
        return 'MultiPoly(%r)' % (self.terms,)


def _variable_index(name):
    kind, number = name[0], int(name[1:])
    return 2 * (number - 1) + (0 if kind == 'p' else 1)


def _pow_array(field, x, n):
    result = np.ones(np.shape(x), dtype=np.int64)
    base = np.asarray(x, dtype=np.int64)
    while n:
        if n & 1:
            result = field.mul_array(result, base)
        base = field.mul_array(base, base)
        n >>= 1
    return result


class BipartiteSpec(object):
    """Parameters of BGamma(q; h_2, ..., h_k).

    Attributes:
        field (FiniteField): F_q
        k (int): dimension, at least 2
        hs (MultiPoly tuple): h_2..h_k
        name (str): label for logs and exports
        cayley_side (int or None): side whose distance-two graph is an
            S(k,q) with matching labels, when known
        s_spec (SGraphSpec or None): that S(k,q)
    """

    def __init__(self, field, k, hs, name='', cayley_side=None, s_spec=None):
        hs = tuple(hs)
        if k < 2 or len(hs) != k - 1:
            raise InvalidSpec("BGamma_%d needs %d h polynomials, got %d" % (k, k - 1, len(hs)))
        for i, h in enumerate(hs, 2):
            if h.nvars > 2 * i - 2:
                raise InvalidSpec("h_%d may only use p_1, l_1, ..., p_%d, l_%d" % (i, i - 1, i - 1))
        self.field = field
        self.k = k
        self.hs = hs
        self.name = name
        self.cayley_side = cayley_side
        self.s_spec = s_spec

    def __repr__(self):
        return 'BGamma(%s, k=%d, q=%d)' % (self.name or 'custom', self.k, self.field.q)


def wenger_spec(field, k):
    """W_k(q): h_i = p_1 l_1^(i-1), 2 <= i <= k+1."""
    hs = [MultiPoly.monomial(p1=1, l1=i - 1) for i in range(2, k + 2)]
    s_spec = None
    if k >= 2 and k <= field.q - 1:
        s_spec = SGraphSpec(field, k + 1,
            [Poly.monomial(field, i - 1) for i in range(3, k + 2)],
            [Poly.monomial(field, 1) for _i in range(3, k + 2)])
    return BipartiteSpec(field, k + 1, hs, name='wenger', cayley_side=POINTS, s_spec=s_spec)


def linearized_wenger_spec(field, k):
    """L_k(q): h_i = p_1^(p^(i-2)) l_1, 2 <= i <= k+1."""
    p = field.p
    hs = [MultiPoly.monomial(p1=p ** (i - 2), l1=1) for i in range(2, k + 2)]
    s_spec = None
    if k >= 2:
        s_spec = SGraphSpec(field, k + 1,
            [Poly.monomial(field, p ** (i - 2)) for i in range(3, k + 2)],
            [Poly.monomial(field, 1) for _i in range(3, k + 2)])
    return BipartiteSpec(field, k + 1, hs, name='linearized', cayley_side=LINES, s_spec=s_spec)


def d4_spec(field):
    """D(4,q) = BGamma(q; p_1 l_1, p_1 l_2, p_2 l_1)."""
    hs = [
        MultiPoly.monomial(p1=1, l1=1),
        MultiPoly.monomial(p1=1, l2=1),
        MultiPoly.monomial(p2=1, l1=1),
    ]
    return BipartiteSpec(field, 4, hs, name='d4')


def build_bipartite(spec, vertex_cap=DEFAULT_VERTEX_CAP):
    """Construct BGamma_k on P_k (vertices 0..q^k-1) and L_k (q^k..2q^k-1).

    Raises:
        SizeExceeded: 2 q**k is above vertex_cap
        InvariantViolation: the unique-neighbour property fails
    """
    field = spec.field
    q, k = field.q, spec.k
    half = q ** k
    if 2 * half > vertex_cap:
        raise SizeExceeded("vertex count", 2 * half, vertex_cap)

    points = decode_vectors(field, k, np.arange(half))
    point_columns = [points[:, i] for i in range(k)]
    lines = np.empty((half, q), dtype=np.int64)
    for alpha in range(q):
        variables = []
        line_columns = [np.full(half, alpha, dtype=np.int64)]
        for i in range(2, k + 1):
            variables.extend([point_columns[i - 2], line_columns[i - 2]])
            h_value = spec.hs[i - 2].evaluate_array(field, variables)
            line_columns.append(field.add_array(h_value, field.neg_array(point_columns[i - 1])))
        lines[:, alpha] = half + encode_vectors(field, np.stack(line_columns, axis=1))

    src = np.repeat(np.arange(half, dtype=np.int64), q)
    dst = lines.ravel()
    g = Graph.from_edge_arrays(2 * half, np.concatenate([src, dst]), np.concatenate([dst, src]),
        sides=(np.arange(half), np.arange(half, 2 * half)), check=2 * half <= 10 ** 4)
    _check_unique_neighbours(field, k, g)
    logger.info("Built %r: %d vertices, %d edges", spec, g.n, g.edge_count)
    return g


def _check_unique_neighbours(field, k, g):
    q = field.q
    half = g.n // 2
    if g.regular_degree != q:
        raise InvariantViolation("bipartite graph is not %d-regular" % q)
    nbrs = g.indices.reshape(g.n, q)
    first = (nbrs % half) % q
    if np.any(np.sort(first, axis=1) != np.arange(q)[None, :]):
        raise InvariantViolation("some vertex lacks a unique neighbour for every first coordinate")


def bipartition(g):
    """The sides of g: stored ones, or a 2-colouring with vertex-minimal roots on side 0.

    Raises:
        NotBipartite: g has an odd cycle
    """
    if g.sides is not None:
        return g.sides
    nx_graph = g.to_networkx()
    try:
        colour = nx.bipartite.color(nx_graph)
    except nx.NetworkXError:
        raise NotBipartite("%r contains an odd cycle" % g)
    for component in nx.connected_components(nx_graph):
        if colour[min(component)] == 1:
            for v in component:
                colour[v] = 1 - colour[v]
    side0 = np.array(sorted(v for v in colour if colour[v] == 0), dtype=np.int64)
    side1 = np.array(sorted(v for v in colour if colour[v] == 1), dtype=np.int64)
    return side0, side1


def distance_two(g, side):
    """Distance-two graph of bipartite g on the given side (POINTS=0, LINES=1).

    Vertices of the result are the positions of the side's vertices in
    ascending order; for BGamma_k graphs these are the canonical encodings.
    meta['four_cycle_free'] records whether no pair was reached twice, which
    is exactly the absence of 4-cycles through that side.
    """
    sides = bipartition(g)
    mine, other = np.asarray(sides[side]), np.asarray(sides[1 - side])
    position = -np.ones(g.n, dtype=np.int64)
    position[mine] = np.arange(mine.size)

    src_parts, dst_parts = [], []
    for z in other:
        nbrs = position[g.neighbours(z)]
        if np.any(nbrs < 0):
            raise NotBipartite("vertex %d has neighbours on its own side" % z)
        if nbrs.size < 2:
            continue
        x, y = np.meshgrid(nbrs, nbrs, indexing='ij')
        mask = x != y
        src_parts.append(x[mask])
        dst_parts.append(y[mask])

    n = mine.size
    if src_parts:
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    keys = src * n + dst
    collapsed = int(keys.size - np.unique(keys).size)
    result = Graph.from_edge_arrays(n, src, dst, check=n <= 10 ** 4,
        meta={'four_cycle_free': collapsed == 0, 'collapsed': collapsed // 2})

    d = g.regular_degree
    if d is not None and collapsed == 0 and result.regular_degree != d * (d - 1):
        raise InvariantViolation("distance-two graph of a %d-regular 4-cycle-free graph "
            "is not %d-regular" % (d, d * (d - 1)))
    if collapsed:
        logger.info("Distance-two graph: %d multi-adjacencies collapsed (4-cycles present)",
            collapsed // 2)
    return result


def export_edges(g, fmt='edgelist'):
    """Deterministic edge list, u < v, sorted.

    Formats: 'edgelist' ("u v" lines), 'csv' (header "u,v"), 'json'.
    """
    edges = list(g.edges())
    if fmt == 'json':
        payload = {'n': g.n, 'edges': [[u, v] for u, v in edges]}
        return (json.dumps(payload, sort_keys=True) + '\n').encode('utf-8')
    if fmt == 'csv':
        lines = ['u,v'] + ['%d,%d' % edge for edge in edges]
    elif fmt == 'edgelist':
        lines = ['%d %d' % edge for edge in edges]
    else:
        raise ValueError("unknown edge format %r" % fmt)
    return ''.join(line + '\n' for line in lines).encode('utf-8')
