from __future__ import unicode_literals, absolute_import

import re
from collections import OrderedDict

import six

from . import json
from .arith import parse_rational, format_rational
from .box import Scenario, Box, validate
from .exceptions import FormatError, ValidationError, BoxError
from .polytope import VertexSet, constraint_system, is_vertex

SPLIT_RE = re.compile(r'\s*[,;]\s*|\s+')


def _document(document):
    if isinstance(document, six.string_types):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise FormatError("Invalid JSON: %s" % e)
        except ValueError as e:
            raise FormatError("Invalid JSON: %s" % e)
    if not isinstance(document, dict):
        raise FormatError("Document must be a JSON object")
    return document


def read_document(path):
    try:
        with open(path) as fp:
            return _document(fp.read())
    except IOError as e:
        raise FormatError("Cannot read %s: %s" % (path, e))


def scenario_parser(parties):
    """
    Format of the parties list:
        [ { "inputs": [d_1, d_2, ...] }, ... ]

    """
    if not isinstance(parties, list) or not parties:
        raise FormatError("'parties' must be a non-empty list")
    cards = []
    for party in parties:
        if not isinstance(party, dict) or not isinstance(party.get('inputs'), list):
            raise FormatError("Every party needs an 'inputs' list")
        inputs = party['inputs']
        if not all(isinstance(d, six.integer_types) and not isinstance(d, bool) for d in inputs):
            raise FormatError("Output cardinalities must be integers")
        cards.append(tuple(inputs))
    try:
        return Scenario(cards)
    except ValidationError as e:
        raise FormatError("%s" % e)


def box_parser(document, check=True):
    """
    Format of the JSON object of a box:
        {
            "parties": [ { "inputs": [d_i1, d_i2, ...] }, ... ],
            "probabilities": [ "n/d", ... ]
        }

    Probabilities follow the canonical flatten order. Extra keys (such as
    the "menu" of an extension) are ignored.

    """
    document = _document(document)
    if 'parties' not in document or 'probabilities' not in document:
        raise FormatError("A box needs 'parties' and 'probabilities'")
    scenario = scenario_parser(document['parties'])
    probabilities = document['probabilities']
    if not isinstance(probabilities, list):
        raise FormatError("'probabilities' must be a list")
    probabilities = [parse_rational(p) for p in probabilities]
    if len(probabilities) != scenario.t:
        raise FormatError("Scenario needs %d probabilities, got %d" % (scenario.t, len(probabilities)))
    b = Box(scenario, probabilities)
    if check:
        violations = validate(b)
        if violations:
            raise ValidationError("Invalid box: %s" % "; ".join(violations))
    return b


def vertex_set_parser(document, system=None):
    """
    Format of the JSON object of a vertex set:
        {
            "scenario": [ { "inputs": [...] }, ... ],
            "vertices": [ { "label": "...", "probabilities": [...] }, ... ]
        }

    Every vertex must pass the rank test against ``system`` (default: the
    non-signaling constraints of the scenario).

    """
    document = _document(document)
    if 'scenario' not in document or not isinstance(document.get('vertices'), list):
        raise FormatError("A vertex set needs 'scenario' and 'vertices'")
    scenario = scenario_parser(document['scenario'])
    vertices = []
    labels = []
    for k, vertex in enumerate(document['vertices']):
        if not isinstance(vertex, dict) or 'probabilities' not in vertex:
            raise FormatError("Vertex %d needs 'probabilities'" % k)
        vertices.append(box_parser({'parties': document['scenario'], 'probabilities': vertex['probabilities']}))
        labels.append(vertex.get('label') or "V_%d" % k)
    if system is None:
        system = constraint_system(scenario)
    for label, v in zip(labels, vertices):
        if not is_vertex(v, system)[0]:
            raise ValidationError("%s is not a vertex of the polytope" % label)
    return VertexSet(scenario, vertices, labels, system=system)


def vertex_set_document(vs):
    return OrderedDict([
        ('scenario', json.scenario_document(vs.scenario)),
        ('vertices', [OrderedDict([
            ('label', label),
            ('probabilities', [format_rational(p) for p in v.probabilities]),
        ]) for label, v in zip(vs.labels, vs.vertices)]),
    ])


def ensemble_document(e):
    return OrderedDict([
        ('support', e.labels()),
        ('weights', [format_rational(w) for w in e.support_weights()]),
    ])


def report_document(report):
    return OrderedDict([
        ('target', json.box_document(report.target)),
        ('vertex_set', list(report.vertex_set.labels)),
        ('count', len(report.ensembles)),
        ('ensembles', [ensemble_document(e) for e in report.ensembles]),
    ])


def extension_document(spec, box):
    document = json.box_document(box)
    document['menu'] = [
        OrderedDict([
            ('z', k),
            ('support', spec.labels[k] if spec.labels else ["m_%d" % i for i in range(len(entry))]),
            ('weights', [format_rational(p) for p, _ in entry]),
        ]) for k, entry in enumerate(spec.ensemble_menu)
    ]
    return document


def menu_parser(document, base_scenario):
    """
    Format of an extension menu:
        {
            "menu": [
                [ { "weight": "n/d", "probabilities": [...] }, ... ],
                ...
            ]
        }

    Member boxes share the base scenario.

    """
    document = _document(document)
    entries = document.get('menu')
    if not isinstance(entries, list) or not entries:
        raise FormatError("'menu' must be a non-empty list")
    parties = json.scenario_document(base_scenario)
    menu = []
    for entry in entries:
        if not isinstance(entry, list):
            raise FormatError("Every menu entry must be a list of members")
        members = []
        for member in entry:
            if not isinstance(member, dict) or 'weight' not in member:
                raise FormatError("Every member needs a 'weight' and 'probabilities'")
            box = box_parser({'parties': parties, 'probabilities': member.get('probabilities')})
            members.append((parse_rational(member['weight']), box))
        menu.append(members)
    return menu


def mixed_parser(document):
    """
    Format of a mixed ensemble with its pure decompositions:
        {
            "members": [
                { "weight": "n/d", "probabilities": [...], "decomposition": [...] },
                ...
            ]
        }

    """
    document = _document(document)
    members = document.get('members')
    if not isinstance(members, list) or not members:
        raise FormatError("'members' must be a non-empty list")
    mixed = []
    decompositions = []
    for member in members:
        if not isinstance(member, dict) or 'decomposition' not in member or 'weight' not in member:
            raise FormatError("Every member needs 'weight', 'probabilities' and 'decomposition'")
        parties = member.get('parties') or document.get('parties')
        box = box_parser({'parties': parties, 'probabilities': member.get('probabilities')})
        mixed.append((parse_rational(member['weight']), box))
        decompositions.append([parse_rational(q) for q in member['decomposition']])
    return mixed, decompositions


def ensemble_parser(document):
    """
    Format of an ensemble: { "weights": [ "n/d", ... ] } over a vertex set.

    """
    document = _document(document)
    weights = document.get('weights')
    if not isinstance(weights, list):
        raise FormatError("'weights' must be a list")
    return [parse_rational(w) for w in weights]


def integers_parser(value, name="value"):
    """Parses "1,0,2" style lists of integers."""
    if value is None:
        return None
    try:
        return [int(v) for v in SPLIT_RE.split(value.strip()) if v]
    except ValueError:
        raise FormatError("Invalid %s: %r" % (name, value))


def rational_parser(value, name="value"):
    if value is None:
        return None
    try:
        return parse_rational(value)
    except BoxError as e:
        raise FormatError("Invalid %s: %s" % (name, e))
