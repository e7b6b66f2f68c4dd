# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

"""Reading graph parameters: JSON specs, polynomial flags and family templates.

A JSON spec is {"p": 5, "e": 1, "k": 3, "f": [[0, 0, 1]], "g": [[0, 0, 0, 1]]},
polynomials given as ascending canonical-integer coefficients.

Family templates describe f_i / g_i symbolically, so that one family can be
instantiated over several fields: sums of terms such as "X^2", "3*X^3",
"X^(p^2)" or a bare integer constant.
"""

import json
import logging
import re

from .charsum import Poly, reduced_exponent
from .errors import InvalidSpec
from .gf import DEFAULT_MAX_ORDER, field_of_order, make_field
from .graphs import SGraphSpec, d4_spec, linearized_wenger_spec, wenger_spec

logger = logging.getLogger(__name__)


SPEC_KEYS = ('p', 'e', 'k', 'f', 'g')

BIPARTITE_FAMILIES = {
    'wenger': wenger_spec,
    'linearized': linearized_wenger_spec,
    'd4': lambda field, k: d4_spec(field),
}


def _coefficient_lists(value, name):
    if not isinstance(value, list) or not all(isinstance(poly, list) for poly in value):
        raise InvalidSpec("%s must be a list of coefficient lists, got %r" % (name, value))
    for poly in value:
        for c in poly:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InvalidSpec("%s coefficients must be integers, got %r" % (name, c))
    return value


def parse_poly_list(text, name='f'):
    """Parse a flag such as '[[0,0,1],[0,0,0,1]]'."""
    try:
        value = json.loads(text)
    except ValueError as e:
        raise InvalidSpec("%s is not valid JSON: %s" % (name, e))
    return _coefficient_lists(value, name)


def spec_from_dict(data, max_order=DEFAULT_MAX_ORDER):
    """Build an SGraphSpec from the JSON form.

    Raises:
        InvalidSpec: missing or unknown keys, malformed polynomials
        NonPrime, SizeExceeded: from field construction
        OddnessViolation: some g_i has a nonzero even coefficient, p odd
    """
    if not isinstance(data, dict):
        raise InvalidSpec("a spec must be a JSON object, got %r" % (data,))
    unknown = sorted(set(data) - set(SPEC_KEYS))
    if unknown:
        raise InvalidSpec("unknown spec keys: %s" % ', '.join(unknown))
    missing = [key for key in SPEC_KEYS if key not in data and key != 'e']
    if missing:
        raise InvalidSpec("missing spec keys: %s" % ', '.join(missing))
    return spec_from_values(data['p'], data.get('e', 1), data['k'], data['f'], data['g'],
        max_order=max_order)


def spec_from_values(p, e, k, fs, gs, max_order=DEFAULT_MAX_ORDER):
    fs = _coefficient_lists(fs, 'f')
    gs = _coefficient_lists(gs, 'g')
    for key, value in (('p', p), ('e', e), ('k', k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidSpec("%s must be an integer, got %r" % (key, value))
    if len(fs) != k - 2 or len(gs) != k - 2:
        raise InvalidSpec("k = %d needs %d f and g polynomials, got %d and %d"
            % (k, k - 2, len(fs), len(gs)))
    field = make_field(p, e, max_order=max_order)
    return SGraphSpec(field, k, [Poly(field, f) for f in fs], [Poly(field, g) for g in gs])


def read_spec_file(path, max_order=DEFAULT_MAX_ORDER):
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except ValueError as e:
        raise InvalidSpec("%s is not valid JSON: %s" % (path, e))
    return spec_from_dict(data, max_order=max_order)


def dump_spec(spec):
    return json.dumps(spec.as_dict(), sort_keys=True)


# Templates
# ---------

class PolyTemplate(object):
    """A polynomial whose exponents may depend on the characteristic.

    Attributes:
        text (str): the source, e.g 'X^3 + 2*X^(p^1)'
        terms ((coeff, power, frobenius) list): frobenius is None for
            plain powers, c for X^(p^c)
        regexp (re.RegexObject): single-term pattern
    """

    regexp = re.compile(
        r'^(?:(?P<coeff>\d+)\s*(?:\*\s*)?)?'
        r'(?P<x>X(?:\s*\^\s*(?:(?P<power>\d+)|\(\s*p\s*\^\s*(?P<frobenius>\d+)\s*\)))?)?$'
    )

    def __init__(self, text):
        self.text = text
        self.terms = [self._parse_term(term.strip()) for term in text.split('+')]

    def _parse_term(self, term):
        match = self.regexp.match(term)
        if not term or not match or (match.group('coeff') is None and match.group('x') is None):
            raise InvalidSpec("cannot parse polynomial term %r in %r" % (term, self.text))
        coeff = int(match.group('coeff') or 1)
        if match.group('x') is None:
            return coeff, 0, None
        if match.group('frobenius') is not None:
            return coeff, None, int(match.group('frobenius'))
        return coeff, int(match.group('power') or 1), None

    def instantiate(self, field):
        terms = []
        for coeff, power, frobenius in self.terms:
            n = power if frobenius is None else field.p ** frobenius
            folded = reduced_exponent(n, field.q)
            if folded != n:
                logger.warning("%s: X^%d folded to X^%d over F_%d", self.text, n, folded, field.q)
            terms.append((folded, field.from_int(coeff)))
        return Poly.from_terms(field, terms)

    def __str__(self):
        return self.text

    def __repr__(self):
        return 'PolyTemplate(%r)' % self.text


class FamilyTemplate(object):
    """S(k, q; f_3, g_3, ...) with templated polynomials, for varying q."""

    def __init__(self, fs, gs, max_order=DEFAULT_MAX_ORDER):
        if len(fs) != len(gs) or not fs:
            raise InvalidSpec("a family needs as many f as g templates, at least one each")
        self.fs = [f if isinstance(f, PolyTemplate) else PolyTemplate(f) for f in fs]
        self.gs = [g if isinstance(g, PolyTemplate) else PolyTemplate(g) for g in gs]
        self.max_order = max_order

    @property
    def k(self):
        return len(self.fs) + 2

    def instantiate(self, q):
        field = field_of_order(q, max_order=self.max_order)
        return SGraphSpec(field, self.k,
            [f.instantiate(field) for f in self.fs],
            [g.instantiate(field) for g in self.gs])

    def __str__(self):
        return 'f=[%s]; g=[%s]' % (', '.join(map(str, self.fs)), ', '.join(map(str, self.gs)))


def parse_family(f_text, g_text, max_order=DEFAULT_MAX_ORDER):
    """Comma-separated templates, e.g parse_family('X^2, X^3', 'X^3, X^3')."""
    return FamilyTemplate(
        [part for part in (s.strip() for s in f_text.split(',')) if part],
        [part for part in (s.strip() for s in g_text.split(',')) if part],
        max_order=max_order,
    )


def bipartite_spec(name, field, k):
    try:
        factory = BIPARTITE_FAMILIES[name]
    except KeyError:
        raise InvalidSpec("unknown bipartite family %r; expected one of %s"
            % (name, ', '.join(sorted(BIPARTITE_FAMILIES))))
    return factory(field, k)
