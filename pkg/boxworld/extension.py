from __future__ import unicode_literals, absolute_import, division

import logging
import itertools
from fractions import Fraction

from six.moves import range

from .arith import ZERO
from .box import Scenario, Box, check_nonsignaling, check_valid, marginal, mixture, is_deterministic
from .bell import pad_outputs
from .ensembles import minimal_ensembles
from .exceptions import ValidationError
from .polytope import DEFAULT_CAP, enumerate_vertices, is_vertex


class ExtensionSpec(object):
    """
    Menu of ensembles of ``base``: entry ``k`` lists the ``(p(i|k), member)``
    pairs steered by input ``k`` of the extending party.

    """

    def __init__(self, base, ensemble_menu, labels=None, report=None):
        self.base = base
        self.ensemble_menu = [[(Fraction(p), member) for p, member in entry] for entry in ensemble_menu]
        self.labels = labels
        self.report = report
        self.check()

    def check(self):
        if not self.ensemble_menu:
            raise ValidationError("An extension needs at least one menu entry")
        for k, entry in enumerate(self.ensemble_menu):
            if not entry:
                raise ValidationError("Menu entry %d is empty" % k)
            weights = [p for p, _ in entry]
            if any(p < 0 for p in weights) or sum(weights, ZERO) != 1:
                raise ValidationError("Menu entry %d weights are not a probability vector" % k)
            for p, member in entry:
                if member.scenario != self.base.scenario:
                    raise ValidationError("Menu entry %d has a member of another scenario" % k)
                check_valid(member)
            if mixture(weights, [m for _, m in entry]) != self.base:
                raise ValidationError("Menu entry %d is not an ensemble of the base box" % k)

    @property
    def sizes(self):
        return tuple(len(entry) for entry in self.ensemble_menu)

    def build(self):
        """P(a, e|x, z) = p(e|z) P^{e,z}(a|x), the extending party last."""
        scenario = Scenario(self.base.scenario.parties + (self.sizes,))
        menu = self.ensemble_menu

        def p(a, x):
            weight, member = menu[x[-1]][a[-1]]
            return weight * member[a[:-1], x[:-1]] if weight else ZERO
        return Box.from_function(scenario, p)


def complete_extension_spec(base, vs, max_support=None, prune_nonlocal=False, jobs=1, log=logging):
    """
    The menu of a complete extension: one entry per minimal ensemble in
    canonical order, members in ascending vertex order.

    """
    check_nonsignaling(base)
    report = minimal_ensembles(base, vs, max_support=max_support, prune_nonlocal=prune_nonlocal, jobs=jobs, log=log)
    menu = [e.members() for e in report]
    labels = [e.labels() for e in report]
    return ExtensionSpec(base, menu, labels=labels, report=report)


def complete_extension(base, vs, max_support=None, prune_nonlocal=False, jobs=1, log=logging):
    spec = complete_extension_spec(base, vs, max_support=max_support, prune_nonlocal=prune_nonlocal, jobs=jobs, log=log)
    log.debug("Complete extension with %d inputs and output cardinalities %r", len(spec.sizes), spec.sizes)
    return spec.build()


def arbitrary_extension(base, menu, labels=None):
    """Extension steering ``base`` into each mixed ensemble of ``menu``."""
    check_nonsignaling(base)
    return ExtensionSpec(base, menu, labels=labels).build()


def conjugate_box(ce, party=None):
    """Marginal of an extension on its extending party (the last by default)."""
    if party is None:
        party = ce.scenario.n - 1
    check_nonsignaling(ce)
    return marginal(ce, [party])


def conjugate_extension(ce, party=None, cap=DEFAULT_CAP, jobs=1, log=logging):
    """Complete extension of the conjugate box over its enumerated vertices."""
    box = conjugate_box(ce, party)
    vs = enumerate_vertices(box.scenario, cap=cap, log=log)
    log.debug("Conjugate box lives in %r with %d vertices", box.scenario.parties, len(vs))
    return complete_extension(box, vs, jobs=jobs, log=log)


def pad_to_rectangular(b, party=None):
    """
    Pads the outputs of ``party`` (every party when ``None``) with zero
    probability outcomes up to that party's largest cardinality. Lossy for
    vertex tests: every padded outcome adds a tight nonnegativity.

    """
    parties = range(b.scenario.n) if party is None else [party]
    for i in parties:
        cards = b.scenario.parties[i]
        largest = max(cards)
        for z, d in enumerate(cards):
            if d < largest:
                b = pad_outputs(b, i, z, largest)
    return b


def _farey(max_denominator):
    return sorted(set(Fraction(n, d) for d in range(1, max_denominator + 1) for n in range(d + 1)))


def grid_boxes(scenario, max_denominator):
    """Every single-party box whose entries have denominators up to ``max_denominator``."""
    if not isinstance(scenario, Scenario):
        scenario = Scenario(scenario)
    if scenario.n != 1:
        raise ValidationError("Grid scans are defined for single-party scenarios")
    values = _farey(max_denominator)
    allowed = set(values)
    per_input = []
    for d in scenario.parties[0]:
        distributions = []
        for head in itertools.product(values, repeat=d - 1):
            last = 1 - sum(head, ZERO)
            if last in allowed:
                distributions.append(head + (last,))
        per_input.append(distributions)
    return [Box(scenario, [p for dist in combo for p in dist]) for combo in itertools.product(*per_input)]


def purification_census(scenario, vs, grid=None, max_denominator=8, log=logging):
    """Grid boxes whose complete extension over ``vs`` is a vertex."""
    if grid is None:
        grid = grid_boxes(scenario, max_denominator)
    purified = []
    for b in grid:
        if is_deterministic(b):
            purified.append(b)
            continue
        ce = complete_extension(b, vs, log=log)
        vertex, tight, t = is_vertex(ce)
        if vertex:
            purified.append(b)
    log.info("%d of %d grid boxes have a purifying complete extension", len(purified), len(grid))
    return purified
