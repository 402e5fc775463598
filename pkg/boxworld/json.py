# -*- coding: utf-8 -*-
from __future__ import absolute_import, unicode_literals
"""
Boxworld
~~~~~~~~

JSON wrappers that know how to encode exact rationals, scenarios, boxes,
ensembles and channels. Rationals are always written as "n/d" strings.

"""
from collections import OrderedDict
from fractions import Fraction

try:
    import simplejson as json
except ImportError:
    import json

from .arith import format_rational
from .box import Scenario, Box

try:
    JSONDecodeError = json.JSONDecodeError
except AttributeError:
    JSONDecodeError = ValueError


def scenario_document(scenario):
    return [OrderedDict([('inputs', list(cards))]) for cards in scenario.parties]


def box_document(b):
    return OrderedDict([
        ('parties', scenario_document(b.scenario)),
        ('probabilities', [format_rational(p) for p in b.probabilities]),
    ])


class BoxJSONEncoder(json.JSONEncoder):
    """
    JSONEncoder subclass that knows how to encode rationals, scenarios and
    boxes.

    """

    ENCODER_BY_TYPE = {
        Fraction: format_rational,
        Scenario: scenario_document,
        Box: box_document,
        set: list,
        frozenset: list,
        bytes: lambda o: o.decode('utf-8', errors='replace'),
    }

    def default(self, obj):
        try:
            return self.ENCODER_BY_TYPE[type(obj)](obj)
        except Exception:
            return super(BoxJSONEncoder, self).default(obj)


def dump(obj, fp, **kwargs):
    kwargs.setdefault('ensure_ascii', False)
    kwargs.setdefault('indent', 2)
    return json.dump(obj, fp, cls=BoxJSONEncoder, **kwargs)


def dumps(value, **kwargs):
    kwargs.setdefault('ensure_ascii', False)
    kwargs.setdefault('indent', 2)
    return json.dumps(value, cls=BoxJSONEncoder, **kwargs)


def load(fp, **kwargs):
    return json.load(fp, object_pairs_hook=OrderedDict, **kwargs)


def loads(value, **kwargs):
    return json.loads(value, object_pairs_hook=OrderedDict, **kwargs)
