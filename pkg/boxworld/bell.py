from __future__ import unicode_literals, absolute_import, division

import itertools
from collections import namedtuple
from fractions import Fraction

from six.moves import range

from .arith import ZERO
from .box import Scenario, Box, relabel
from .exceptions import ValidationError, ScenarioMismatch

CLASSICAL_BOUND = Fraction(2)

# Quantum maximum of the three-outcome CGLMP expression, for reference only.
CGLMP3_QUANTUM_LIMIT = 2.8729

CHSH_SCENARIO = Scenario(((2, 2), (2, 2)))
CGLMP3_SCENARIO = Scenario(((3, 3), (3, 3)))

BellReport = namedtuple('BellReport', ['functional', 'value', 'variant', 'classical_bound'])


def _require(b, scenario, name):
    if b.scenario != scenario:
        raise ScenarioMismatch("%s needs scenario %r, got %r" % (name, scenario.parties, b.scenario.parties))


def correlator(b, x, y):
    """E(x, y) = sum over outcomes of (-1)^(a + e) P(ae|xy)."""
    return sum((p if (a ^ e) == 0 else -p for (a, e), p in zip(itertools.product(range(2), repeat=2), b.block((x, y)))), ZERO)


def chsh_expression(b, variant=(0, 0, 0)):
    _require(b, CHSH_SCENARIO, "CHSH")
    r, s, t = variant
    total = ZERO
    for x, y in itertools.product(range(2), repeat=2):
        sign = (x & y) ^ (r & x) ^ (s & y) ^ t
        value = correlator(b, x, y)
        total += -value if sign else value
    return total


def chsh(b):
    """
    Maximum over the eight sign variants (r, s, t) of
    sum_xy (-1)^(xy + rx + sy + t) E(x, y); B_rst reaches 4 on its own
    variant.

    """
    _require(b, CHSH_SCENARIO, "CHSH")
    best = None
    for variant in itertools.product(range(2), repeat=3):
        value = chsh_expression(b, variant)
        if best is None or value > best[0]:
            best = (value, variant)
    return BellReport('chsh', best[0], best[1], CLASSICAL_BOUND)


def _probability(b, relation, x, y):
    """P(relation(a, e)) on inputs (x, y), outcomes taken mod 3."""
    block = b.block((x, y))
    return sum((p for (a, e), p in zip(itertools.product(range(3), repeat=2), block) if p and relation(a, e)), ZERO)


def cglmp3_expression(b):
    """
    I_3 = P(A1=B1) + P(B1=A2+1) + P(A2=B2) + P(B2=A1)
        - P(A1=B1-1) - P(B1=A2) - P(A2=B2-1) - P(B2=A1-1)

    with A1, A2 the first party's inputs and B1, B2 the second's.

    """
    _require(b, CGLMP3_SCENARIO, "CGLMP")
    plus = (
        _probability(b, lambda a, e: a == e, 0, 0),
        _probability(b, lambda a, e: e == (a + 1) % 3, 1, 0),
        _probability(b, lambda a, e: a == e, 1, 1),
        _probability(b, lambda a, e: e == a, 0, 1),
    )
    minus = (
        _probability(b, lambda a, e: a == (e - 1) % 3, 0, 0),
        _probability(b, lambda a, e: e == a, 1, 0),
        _probability(b, lambda a, e: a == (e - 1) % 3, 1, 1),
        _probability(b, lambda a, e: e == (a - 1) % 3, 0, 1),
    )
    return sum(plus, ZERO) - sum(minus, ZERO)


def _output_relabelings(scenario):
    per_party = []
    for cards in scenario.parties:
        per_party.append(list(itertools.product(*[itertools.permutations(range(d)) for d in cards])))
    return per_party


def _input_relabelings(scenario):
    return [list(itertools.permutations(range(len(cards)))) for cards in scenario.parties]


def cglmp3(b):
    """I_3 maximized over local output relabelings."""
    _require(b, CGLMP3_SCENARIO, "CGLMP")
    best = None
    outputs = _output_relabelings(b.scenario)
    for first, second in itertools.product(*outputs):
        relabeling = {0: (None, first), 1: (None, second)}
        value = cglmp3_expression(relabel(b, relabeling))
        if best is None or value > best[0]:
            best = (value, relabeling)
    return BellReport('cglmp3', best[0], best[1], CLASSICAL_BOUND)


FUNCTIONALS = {
    'chsh': (CHSH_SCENARIO, lambda b: chsh(b).value),
    'cglmp3': (CGLMP3_SCENARIO, cglmp3_expression),
}


def maximize_over_relabelings(b, functional):
    """
    Exhaustive search over per-party input permutations and per-input
    output permutations; the first relabeling reaching the maximum is the
    witness.

    """
    try:
        scenario, evaluate = FUNCTIONALS[functional]
    except KeyError:
        raise ValidationError("Unknown functional %r" % (functional,))
    _require(b, scenario, functional)
    best = None
    inputs = _input_relabelings(b.scenario)
    outputs = _output_relabelings(b.scenario)
    for input_choice in itertools.product(*inputs):
        for output_choice in itertools.product(*outputs):
            relabeling = {k: (input_choice[k], output_choice[k]) for k in range(b.scenario.n)}
            value = evaluate(relabel(b, relabeling))
            if best is None or value > best[0]:
                best = (value, relabeling)
    return BellReport(functional, best[0], best[1], CLASSICAL_BOUND)


def merge_outputs(b, party, inputs, merge_map):
    """
    Sums outcomes of ``party`` on each of ``inputs`` along
    ``merge_map[old] = new``, which must be onto ``range(max + 1)``.

    """
    scenario = b.scenario
    if not 0 <= party < scenario.n:
        raise ValidationError("Invalid party %r" % (party,))
    cards = list(scenario.parties[party])
    if isinstance(inputs, int):
        inputs = [inputs]
    maps = {}
    for z in inputs:
        if not 0 <= z < len(cards):
            raise ValidationError("Invalid input %r for party %d" % (z, party))
        mapping = list(merge_map[z] if isinstance(merge_map, dict) else merge_map)
        if len(mapping) != cards[z]:
            raise ValidationError("Merge map for input %d needs %d entries" % (z, cards[z]))
        size = max(mapping) + 1
        if sorted(set(mapping)) != list(range(size)):
            raise ValidationError("Merge map %r is not onto its outcomes" % (mapping,))
        maps[z] = mapping
        cards[z] = size
    parties = list(scenario.parties)
    parties[party] = tuple(cards)
    merged = Scenario(parties)
    probabilities = [ZERO] * merged.t
    for x, a, i in scenario.layout():
        mapping = maps.get(x[party])
        if mapping is not None:
            a = a[:party] + (mapping[a[party]],) + a[party + 1:]
        probabilities[merged.index(a, x)] += b.probabilities[i]
    return Box(merged, probabilities)


def pad_outputs(b, party, z, cardinality):
    """Appends zero-probability outcomes to input ``z`` of ``party``."""
    scenario = b.scenario
    if not 0 <= party < scenario.n or not 0 <= z < len(scenario.parties[party]):
        raise ValidationError("Invalid party/input %r/%r" % (party, z))
    cards = list(scenario.parties[party])
    if cardinality < cards[z]:
        raise ValidationError("Cannot shrink input %d from %d to %d outputs" % (z, cards[z], cardinality))
    cards[z] = cardinality
    parties = list(scenario.parties)
    parties[party] = tuple(cards)
    padded = Scenario(parties)
    probabilities = [ZERO] * padded.t
    for x, a, i in scenario.layout():
        probabilities[padded.index(a, x)] = b.probabilities[i]
    return Box(padded, probabilities)
