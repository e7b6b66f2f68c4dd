# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

PASS = 'PASS'
FAIL = 'FAIL'
SKIPPED = 'SKIPPED'
HYPOTHESIS_VIOLATED = 'HYPOTHESIS-VIOLATED'


def _plain(value):
    """JSON-friendly view of record fields."""
    if hasattr(value, 'as_dict'):
        return value.as_dict()
    if hasattr(value, 'coeffs') and hasattr(value, 'real_embed'):
        return {'coeffs': list(value.coeffs), 'value': '%.12g' % value.real_embed()}
    if isinstance(value, float):
        return '%.12g' % value
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if hasattr(value, 'item'):
        return value.item()
    return value


class Verdict(object):
    """The outcome of one verified claim.

    Attributes:
        claim (str): what was checked, e.g 'theorem3(q=5, k=4)'
        hypothesis_ok (bool): whether the claim's hypotheses held
        computed (obj): the computed quantity
        predicted (obj): the predicted quantity or bound
        verdict (str): PASS, FAIL, SKIPPED or HYPOTHESIS-VIOLATED
        details (dict): extra figures worth reporting
    """

    __slots__ = ('claim', 'hypothesis_ok', 'computed', 'predicted', 'verdict', 'details')

    def __init__(self, claim, hypothesis_ok=True, computed=None, predicted=None, verdict=PASS,
            details=None):
        self.claim = claim
        self.hypothesis_ok = hypothesis_ok
        self.computed = computed
        self.predicted = predicted
        self.verdict = verdict
        self.details = details or {}

    @classmethod
    def check(cls, claim, holds, computed=None, predicted=None, **details):
        return cls(claim, True, computed, predicted, PASS if holds else FAIL, details)

    @property
    def passed(self):
        return self.verdict in (PASS, SKIPPED)

    def as_dict(self):
        return {
            'claim': self.claim,
            'hypothesis_ok': self.hypothesis_ok,
            'computed': _plain(self.computed),
            'predicted': _plain(self.predicted),
            'verdict': self.verdict,
            'details': _plain(self.details),
        }

    def __repr__(self):
        return 'Verdict(%r, %s)' % (self.claim, self.verdict)
