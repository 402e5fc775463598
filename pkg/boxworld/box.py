from __future__ import unicode_literals, absolute_import, division

import itertools
from collections import namedtuple
from fractions import Fraction

import six
from six.moves import range

from .arith import ZERO, ONE, format_rational
from .exceptions import ValidationError, SignalingError, ScenarioMismatch


def _product(values):
    result = 1
    for v in values:
        result *= v
    return result


class Scenario(object):
    """
    Parties with per-input output cardinalities, e.g. ``((2, 2), (3, 2))``
    for a party with two binary inputs and a party whose first input has
    three outcomes and second input two.

    Joint inputs iterate lexicographically with party 0 slowest; within a
    joint input the joint outputs iterate the same way. That canonical
    order is the order of ``Box.probabilities``.

    """
    __slots__ = ('parties', 'joint_inputs', '_offsets', '_index')

    def __init__(self, parties):
        parties = tuple(tuple(int(d) for d in p) for p in parties)
        if not parties:
            raise ValidationError("A scenario needs at least one party")
        for i, party in enumerate(parties):
            if not party:
                raise ValidationError("Party %d has no inputs" % i)
            if any(d < 1 for d in party):
                raise ValidationError("Party %d has an input without outputs" % i)
        self.parties = parties
        self.joint_inputs = tuple(itertools.product(*[range(len(p)) for p in parties]))
        offsets = {}
        offset = 0
        for x in self.joint_inputs:
            offsets[x] = offset
            offset += self.block_size(x)
        self._offsets = offsets
        self._index = {x: i for i, x in enumerate(self.joint_inputs)}

    @property
    def n(self):
        return len(self.parties)

    @property
    def t(self):
        return _product(sum(p) for p in self.parties)

    def cardinalities(self, x):
        return tuple(self.parties[i][xi] for i, xi in enumerate(x))

    def block_size(self, x):
        return _product(self.cardinalities(x))

    def joint_outputs(self, x):
        return itertools.product(*[range(d) for d in self.cardinalities(x)])

    def offset(self, x):
        return self._offsets[tuple(x)]

    def index(self, a, x):
        """Flat index of p(a|x)."""
        x = tuple(x)
        position = 0
        for ai, d in zip(a, self.cardinalities(x)):
            if not 0 <= ai < d:
                raise ValidationError("Output %r out of range for input %r" % (tuple(a), x))
            position = position * d + ai
        try:
            return self._offsets[x] + position
        except KeyError:
            raise ValidationError("Input %r out of range" % (x,))

    def layout(self):
        """Yields (x, a, flat index) in canonical order."""
        i = 0
        for x in self.joint_inputs:
            for a in self.joint_outputs(x):
                yield x, a, i
                i += 1

    def sub(self, parties):
        return Scenario([self.parties[i] for i in parties])

    def __eq__(self, other):
        return isinstance(other, Scenario) and self.parties == other.parties

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.parties)

    def __repr__(self):
        return "Scenario(%r)" % (self.parties,)


class Box(object):
    """
    A conditional probability table P(a|x) over a scenario, stored in
    canonical flatten order.

    """
    __slots__ = ('scenario', 'probabilities')

    def __init__(self, scenario, probabilities):
        if not isinstance(scenario, Scenario):
            scenario = Scenario(scenario)
        probabilities = tuple(Fraction(p) for p in probabilities)
        if len(probabilities) != scenario.t:
            raise ValidationError("Scenario %r needs %d probabilities, got %d" % (scenario.parties, scenario.t, len(probabilities)))
        self.scenario = scenario
        self.probabilities = probabilities

    @classmethod
    def from_function(cls, scenario, func):
        if not isinstance(scenario, Scenario):
            scenario = Scenario(scenario)
        return cls(scenario, [func(a, x) for x, a, _ in scenario.layout()])

    def __getitem__(self, key):
        a, x = key
        return self.probabilities[self.scenario.index(a, x)]

    def block(self, x):
        offset = self.scenario.offset(x)
        return self.probabilities[offset:offset + self.scenario.block_size(x)]

    def __eq__(self, other):
        return isinstance(other, Box) and self.scenario == other.scenario and self.probabilities == other.probabilities

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.scenario, self.probabilities))

    def __repr__(self):
        return "Box(%r, [%s])" % (self.scenario.parties, ", ".join(format_rational(p) for p in self.probabilities))


JointOutcome = namedtuple('JointOutcome', ['probability', 'residual'])


def validate(b):
    violations = []
    for x, a, i in b.scenario.layout():
        p = b.probabilities[i]
        if p < 0 or p > 1:
            violations.append("p(%s|%s) = %s is not in [0, 1]" % (a, x, format_rational(p)))
    for x in b.scenario.joint_inputs:
        total = sum(b.block(x), ZERO)
        if total != 1:
            violations.append("outputs of input %s sum to %s" % (x, format_rational(total)))
    return violations


def check_valid(b):
    violations = validate(b)
    if violations:
        raise ValidationError("Invalid box: %s" % "; ".join(violations))


def _party_sums(b, party):
    """Maps (rest inputs, rest outputs) -> {party input: summed probability}."""
    sums = {}
    for x, a, i in b.scenario.layout():
        key = (x[:party] + x[party + 1:], a[:party] + a[party + 1:])
        by_input = sums.setdefault(key, {})
        by_input[x[party]] = by_input.get(x[party], ZERO) + b.probabilities[i]
    return sums


def is_nonsignaling(b):
    """
    Checks, party by party, that the marginal of the other parties does not
    depend on that party's input.

    """
    if b.scenario.n == 1:
        return True
    for party in range(b.scenario.n):
        for by_input in six.itervalues(_party_sums(b, party)):
            if len(set(by_input.values())) > 1:
                return False
    return True


def check_nonsignaling(b):
    check_valid(b)
    if not is_nonsignaling(b):
        raise SignalingError("The box is signaling")


def marginal(b, keep):
    keep = sorted(set(keep))
    if not keep or keep[0] < 0 or keep[-1] >= b.scenario.n:
        raise ValidationError("Invalid party subset %r" % (keep,))
    if len(keep) == b.scenario.n:
        return b
    if not is_nonsignaling(b):
        raise SignalingError("Marginal of a signaling box is input dependent")
    scenario = b.scenario.sub(keep)
    dropped = [i for i in range(b.scenario.n) if i not in keep]
    values = {}
    for x, a, i in b.scenario.layout():
        if any(x[d] for d in dropped):
            continue
        key = (tuple(x[k] for k in keep), tuple(a[k] for k in keep))
        values[key] = values.get(key, ZERO) + b.probabilities[i]
    return Box(scenario, [values[(x, a)] for x, a, _ in scenario.layout()])


def condition(b, party, z, e):
    """
    Outcome ``e`` of input ``z`` on ``party``: its probability and the
    renormalized box of the remaining parties (``None`` when the outcome
    has probability zero).

    """
    scenario = b.scenario
    if scenario.n < 2:
        raise ValidationError("Conditioning needs at least two parties")
    if not 0 <= party < scenario.n:
        raise ValidationError("Invalid party %r" % (party,))
    if not 0 <= z < len(scenario.parties[party]):
        raise ValidationError("Invalid input %r for party %d" % (z, party))
    if not 0 <= e < scenario.parties[party][z]:
        raise ValidationError("Invalid output %r for input %d of party %d" % (e, z, party))
    if not is_nonsignaling(b):
        raise SignalingError("Cannot condition a signaling box")
    rest = [i for i in range(scenario.n) if i != party]
    residual_scenario = scenario.sub(rest)
    joint = []
    for x, a, _ in residual_scenario.layout():
        fx = x[:party] + (z,) + x[party:]
        fa = a[:party] + (e,) + a[party:]
        joint.append(b[fa, fx])
    first = residual_scenario.joint_inputs[0]
    probability = sum(joint[:residual_scenario.block_size(first)], ZERO)
    if not probability:
        return JointOutcome(probability, None)
    return JointOutcome(probability, Box(residual_scenario, [p / probability for p in joint]))


def tensor(b1, b2):
    scenario = Scenario(b1.scenario.parties + b2.scenario.parties)
    probabilities = []
    for x in b1.scenario.joint_inputs:
        block1 = b1.block(x)
        for y in b2.scenario.joint_inputs:
            block2 = b2.block(y)
            probabilities.extend(p * q for p in block1 for q in block2)
    return Box(scenario, probabilities)


def _check_permutation(perm, size, what):
    if sorted(perm) != list(range(size)):
        raise ValidationError("%s %r is not a permutation of %d elements" % (what, perm, size))


def relabel(b, relabelings):
    """
    Relabels inputs and outputs. ``relabelings`` maps a party to a pair
    ``(inputs, outputs)``: ``inputs[old] = new`` and
    ``outputs[old_input][old_output] = new_output``. Either may be ``None``
    for the identity.

    """
    scenario = b.scenario
    input_maps = []
    output_maps = []
    for party, cards in enumerate(scenario.parties):
        inputs, outputs = relabelings.get(party, (None, None))
        if inputs is None:
            inputs = list(range(len(cards)))
        inputs = list(inputs)
        _check_permutation(inputs, len(cards), "Input relabeling of party %d" % party)
        if outputs is None:
            outputs = [None] * len(cards)
        outputs = list(outputs)
        if len(outputs) != len(cards):
            raise ValidationError("Party %d needs %d output relabelings" % (party, len(cards)))
        outputs = [list(range(d)) if o is None else list(o) for o, d in zip(outputs, cards)]
        for j, (o, d) in enumerate(zip(outputs, cards)):
            _check_permutation(o, d, "Output relabeling of input %d of party %d" % (j, party))
        input_maps.append(inputs)
        output_maps.append(outputs)

    parties = []
    for party, cards in enumerate(scenario.parties):
        new_cards = [None] * len(cards)
        for old, new in enumerate(input_maps[party]):
            new_cards[new] = cards[old]
        parties.append(new_cards)
    new_scenario = Scenario(parties)

    probabilities = [None] * new_scenario.t
    for x, a, i in scenario.layout():
        nx = tuple(input_maps[k][xk] for k, xk in enumerate(x))
        na = tuple(output_maps[k][xk][ak] for k, (xk, ak) in enumerate(zip(x, a)))
        probabilities[new_scenario.index(na, nx)] = b.probabilities[i]
    return Box(new_scenario, probabilities)


def invert_relabeling(relabelings, scenario):
    inverse = {}
    for party, (inputs, outputs) in six.iteritems(relabelings):
        cards = scenario.parties[party]
        if inputs is None:
            inputs = list(range(len(cards)))
        if outputs is None:
            outputs = [None] * len(cards)
        inv_inputs = [None] * len(inputs)
        inv_outputs = [None] * len(inputs)
        for old, new in enumerate(inputs):
            inv_inputs[new] = old
            perm = outputs[old] if outputs[old] is not None else list(range(cards[old]))
            inv = [None] * len(perm)
            for o, n in enumerate(perm):
                inv[n] = o
            inv_outputs[new] = inv
        inverse[party] = (inv_inputs, inv_outputs)
    return inverse


def permute_parties(b, order):
    """New party ``k`` is old party ``order[k]``."""
    order = list(order)
    _check_permutation(order, b.scenario.n, "Party order")
    scenario = b.scenario.sub(order)
    probabilities = []
    for x, a, _ in scenario.layout():
        ox = [None] * len(order)
        oa = [None] * len(order)
        for k, old in enumerate(order):
            ox[old] = x[k]
            oa[old] = a[k]
        probabilities.append(b[tuple(oa), tuple(ox)])
    return Box(scenario, probabilities)


def flatten(b):
    return b.probabilities


def unflatten(scenario, vector):
    if not isinstance(scenario, Scenario):
        scenario = Scenario(scenario)
    vector = tuple(vector)
    if len(vector) != scenario.t:
        raise ValidationError("Expected %d coordinates, got %d" % (scenario.t, len(vector)))
    return Box(scenario, vector)


def is_deterministic(b):
    return all(p == 0 or p == 1 for p in b.probabilities)


def mixture(weights, boxes):
    weights = [Fraction(w) for w in weights]
    boxes = list(boxes)
    if not boxes or len(weights) != len(boxes):
        raise ValidationError("Need one weight per box")
    scenario = boxes[0].scenario
    for other in boxes[1:]:
        if other.scenario != scenario:
            raise ScenarioMismatch("Cannot mix boxes of different scenarios")
    return Box(scenario, [
        sum((w * p for w, p in zip(weights, column) if w and p), ZERO)
        for column in zip(*[bx.probabilities for bx in boxes])
    ])


def relabeling_signature(b, party):
    """
    Canonical form of ``b`` under relabelings of one party's inputs and
    outputs: for every input the sorted list of its output slices, then the
    sorted list of those.

    """
    scenario = b.scenario
    rest = [i for i in range(scenario.n) if i != party]
    rest_scenario = scenario.sub(rest) if rest else None
    signature = []
    for z, d in enumerate(scenario.parties[party]):
        slices = []
        for e in range(d):
            if rest_scenario is None:
                slices.append((b[(e,), (z,)],))
                continue
            column = []
            for x, a, _ in rest_scenario.layout():
                column.append(b[a[:party] + (e,) + a[party:], x[:party] + (z,) + x[party:]])
            slices.append(tuple(column))
        signature.append(tuple(sorted(slices)))
    others = tuple(scenario.parties[i] for i in rest)
    return others, tuple(sorted(signature))


def same_up_to_relabeling(b1, b2, party):
    return relabeling_signature(b1, party) == relabeling_signature(b2, party)


def deterministic_box(scenario, strategy):
    """``strategy[i][j]`` is the output of party ``i`` on input ``j``."""
    if not isinstance(scenario, Scenario):
        scenario = Scenario(scenario)

    def p(a, x):
        return ONE if all(strategy[i][xi] == ai for i, (xi, ai) in enumerate(zip(x, a))) else ZERO
    return Box.from_function(scenario, p)
