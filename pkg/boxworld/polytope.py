from __future__ import unicode_literals, absolute_import, division

import itertools
import logging
import time
from fractions import Fraction

from six.moves import range

from .arith import ZERO, ONE, RatMatrix, rank, solve_unique, independent_rows
from .box import Scenario, Box, deterministic_box, check_nonsignaling, is_deterministic, mixture
from .exceptions import CapExceeded, ValidationError, ScenarioMismatch
from .utils import format_time

DEFAULT_CAP = 12

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class ConstraintSystem(object):
    """
    Equalities (normalization, non-signaling and any extra rows) plus one
    nonnegativity inequality per coordinate.

    """

    def __init__(self, scenario, equalities, rhs, extra=0):
        self.scenario = scenario
        self.equalities = equalities
        self.rhs = tuple(rhs)
        self.extra = extra
        self._rank = None
        self._basis = None

    @property
    def t(self):
        return self.equalities.cols

    @property
    def rank(self):
        if self._rank is None:
            self._rank = len(self.basis)
        return self._rank

    @property
    def basis(self):
        """Indices of an independent subset of the equality rows."""
        if self._basis is None:
            self._basis = independent_rows(self.equalities)
        return self._basis

    @property
    def effective_dimension(self):
        return self.t - self.rank

    def satisfies(self, vector):
        vector = tuple(vector)
        if any(v < 0 for v in vector):
            return False
        return self.equalities * vector == self.rhs


def _sparse_rows(scenario):
    rows = []
    rhs = []
    # normalization
    for x in scenario.joint_inputs:
        offset = scenario.offset(x)
        rows.append(tuple((offset + k, 1) for k in range(scenario.block_size(x))))
        rhs.append(ONE)
    # non-signaling: party input 0 against input j, per complement input and output
    seen = set()
    for party, cards in enumerate(scenario.parties):
        if scenario.n == 1:
            break
        rest = [i for i in range(scenario.n) if i != party]
        rest_scenario = scenario.sub(rest)
        for rx, ra, _ in rest_scenario.layout():
            def coords(xi):
                x = rx[:party] + (xi,) + rx[party:]
                return [scenario.index(ra[:party] + (ai,) + ra[party:], x) for ai in range(cards[xi])]
            base = coords(0)
            for j in range(1, len(cards)):
                row = tuple(sorted([(c, 1) for c in base] + [(c, -1) for c in coords(j)]))
                if row not in seen:
                    seen.add(row)
                    rows.append(row)
                    rhs.append(ZERO)
    return rows, rhs


def _dense(rows, t):
    dense = []
    for row in rows:
        values = [ZERO] * t
        for c, v in row:
            values[c] += v
        dense.append(values)
    return dense


def constraint_system(s, extra_rows=()):
    """
    Normalization rows per joint input, then non-signaling rows per party
    and complement input/output, then ``extra_rows`` (each with right hand
    side 0).

    """
    if not isinstance(s, Scenario):
        s = Scenario(s)
    rows, rhs = _sparse_rows(s)
    dense = _dense(rows, s.t)
    extra_rows = [tuple(r) for r in extra_rows]
    for row in extra_rows:
        if len(row) != s.t:
            raise ValidationError("Extra constraint has %d entries, expected %d" % (len(row), s.t))
        dense.append(row)
        rhs.append(ZERO)
    return ConstraintSystem(s, RatMatrix.from_rows(dense, s.t), rhs, extra=len(extra_rows))


def ns_dimension(s):
    if not isinstance(s, Scenario):
        s = Scenario(s)
    result = 1
    for cards in s.parties:
        result *= 1 + sum(d - 1 for d in cards)
    return result - 1


def is_vertex(b, system=None):
    """
    Rank test on the equality rows plus the nonnegativity rows tight at
    ``b``. Returns ``(is_vertex, tight_rank, t)``.

    """
    check_nonsignaling(b)
    if system is None:
        system = constraint_system(b.scenario)
    elif system.scenario != b.scenario:
        raise ScenarioMismatch("Constraint system is for %r, box is %r" % (system.scenario.parties, b.scenario.parties))
    if not system.satisfies(b.probabilities):
        raise ValidationError("Box violates the constraint system")
    t = system.t
    rows = [system.equalities.row(i) for i in system.basis]
    for j, p in enumerate(b.probabilities):
        if not p:
            rows.append(tuple(ONE if k == j else ZERO for k in range(t)))
    tight = rank(RatMatrix.from_rows(rows, t)) if rows else 0
    return tight == t, tight, t


class VertexSet(object):
    def __init__(self, scenario, vertices, labels=None, system=None):
        if not isinstance(scenario, Scenario):
            scenario = Scenario(scenario)
        vertices = list(vertices)
        if labels is None:
            labels = ["V_%d" % i for i in range(len(vertices))]
        labels = list(labels)
        if len(labels) != len(vertices):
            raise ValidationError("Need one label per vertex")
        seen = set()
        for v in vertices:
            if v.scenario != scenario:
                raise ScenarioMismatch("Vertex of scenario %r in a set for %r" % (v.scenario.parties, scenario.parties))
            if v.probabilities in seen:
                raise ValidationError("Duplicate vertex %r" % (v,))
            seen.add(v.probabilities)
        self.scenario = scenario
        self.vertices = vertices
        self.labels = labels
        self.system = system

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, index):
        return self.vertices[index]

    def index(self, label):
        return self.labels.index(label)

    def constraints(self):
        if self.system is None:
            self.system = constraint_system(self.scenario)
        return self.system


def _strategies(cards):
    return list(itertools.product(*[range(d) for d in cards]))


def deterministic_vertices(s):
    if not isinstance(s, Scenario):
        s = Scenario(s)
    vertices = []
    labels = []
    for strategy in itertools.product(*[_strategies(cards) for cards in s.parties]):
        vertices.append(deterministic_box(s, strategy))
        labels.append("D_%s" % ".".join("".join("%d" % o for o in st) for st in strategy))
    return VertexSet(s, vertices, labels)


BINARY_PAIR = Scenario(((2, 2), (2, 2)))


def barrett_2222_vertices():
    """
    The 16 local boxes L_abcd (a = ax + b, b = cy + d over GF(2)) and the 8
    non-local B_rst (1/2 when a + b = xy + rx + sy + t).

    """
    vertices = []
    labels = []
    for alpha, beta, gamma, delta in itertools.product(range(2), repeat=4):
        strategy = ((beta, alpha ^ beta), (delta, gamma ^ delta))
        vertices.append(deterministic_box(BINARY_PAIR, strategy))
        labels.append("L_%d%d%d%d" % (alpha, beta, gamma, delta))
    for r, s, t in itertools.product(range(2), repeat=3):
        vertices.append(nonlocal_box(r, s, t))
        labels.append("B_%d%d%d" % (r, s, t))
    return VertexSet(BINARY_PAIR, vertices, labels)


def nonlocal_box(r, s, t):
    def p(a, x):
        return HALF if a[0] ^ a[1] == (x[0] & x[1]) ^ (r & x[0]) ^ (s & x[1]) ^ t else ZERO
    return Box.from_function(BINARY_PAIR, p)


THREECYCLE = Scenario(((4, 4, 4),))

# context x measures the pair (u, v) of the triangle (a, b, c), output 2u + v
THREECYCLE_CONTEXTS = ((0, 1), (1, 2), (2, 0))

NONCONTEXTUAL = ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1))

# (ab, bc, ca), 0 for equal outcomes and 1 for different ones
CONTEXTUAL = ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1))


def _context_output(values, x):
    u, v = THREECYCLE_CONTEXTS[x]
    return 2 * values[u] + values[v]


def threecycle_system():
    """Single-party form of the 3-cycle with its no-disturbance rows."""
    t = THREECYCLE.t

    def row(first, second):
        # p(value = 0) read through context ``first`` against context ``second``
        values = [ZERO] * t
        (xa, pa), (xb, pb) = first, second
        for a in range(4):
            if (a >> (1 - pa)) & 1 == 0:
                values[THREECYCLE.index((a,), (xa,))] += ONE
            if (a >> (1 - pb)) & 1 == 0:
                values[THREECYCLE.index((a,), (xb,))] -= ONE
        return values

    extra = [
        row((0, 0), (2, 1)),  # a
        row((0, 1), (1, 0)),  # b
        row((1, 1), (2, 0)),  # c
    ]
    return constraint_system(THREECYCLE, extra)


def threecycle_vertices():
    vertices = []
    labels = []
    for k, values in enumerate(NONCONTEXTUAL):
        vertices.append(Box.from_function(THREECYCLE, lambda a, x, values=values: ONE if a[0] == _context_output(values, x[0]) else ZERO))
        labels.append("N_%d" % k)
    for k, relations in enumerate(CONTEXTUAL):
        def p(a, x, relations=relations):
            u, v = divmod(a[0], 2)
            return HALF if u ^ v == relations[x[0]] else ZERO
        vertices.append(Box.from_function(THREECYCLE, p))
        labels.append("C_%d" % k)
    return VertexSet(THREECYCLE, vertices, labels, system=threecycle_system())


def enumerate_vertices(s, cap=DEFAULT_CAP, log=logging):
    """
    Exhaustive vertex search: every choice of ``d`` coordinates set to zero
    (``d`` the effective dimension) whose complement columns determine a
    unique feasible point gives a vertex.

    """
    system = s if isinstance(s, ConstraintSystem) else constraint_system(s)
    scenario = system.scenario
    d = system.effective_dimension
    if cap is not None and d > cap:
        raise CapExceeded("Effective dimension %d exceeds the cap of %d" % (d, cap))
    start = time.time()
    equalities = system.equalities.select_rows(system.basis)
    rhs = [system.rhs[i] for i in system.basis]
    t = system.t
    found = set()
    for zeros in itertools.combinations(range(t), d):
        zero_set = set(zeros)
        columns = [j for j in range(t) if j not in zero_set]
        solution = solve_unique(equalities.select_columns(columns), rhs)
        if solution is None or any(v < 0 for v in solution):
            continue
        point = [ZERO] * t
        for j, v in zip(columns, solution):
            point[j] = v
        found.add(tuple(point))
    vertices = [Box(scenario, p) for p in sorted(found, reverse=True)]
    log.debug("Enumerated %d vertices of a %d-dimensional polytope in %s", len(vertices), d, format_time(time.time() - start))
    others = itertools.count()
    labels = [_deterministic_label(v) if is_deterministic(v) else "V_%d" % next(others) for v in vertices]
    return VertexSet(scenario, vertices, labels, system=system)


def _deterministic_label(b):
    scenario = b.scenario
    outputs = []
    for party, cards in enumerate(scenario.parties):
        outs = []
        for j in range(len(cards)):
            x = tuple(j if k == party else 0 for k in range(scenario.n))
            block = b.block(x)
            a = next(a for a, p in zip(scenario.joint_outputs(x), block) if p)
            outs.append("%d" % a[party])
        outputs.append("".join(outs))
    return "D_%s" % ".".join(outputs)


def local_hull_contains(b, vs=None, log=logging):
    """
    Membership of ``b`` in the hull of the deterministic members of ``vs``
    (default: every deterministic box of its scenario).

    """
    from .ensembles import find_ensemble
    if vs is None:
        local = deterministic_vertices(b.scenario)
    else:
        local = [v for v in vs if is_deterministic(v)]
        if not local:
            return False
        local = VertexSet(vs.scenario, local)
    return find_ensemble(b, local, log=log) is not None


def isotropic_box(eta):
    """eta B_000 + (1 - eta) B_001."""
    eta = Fraction(eta)
    return mixture([eta, 1 - eta], [nonlocal_box(0, 0, 0), nonlocal_box(0, 0, 1)])


def threecycle_box(lam):
    """(1 - lambda) C_0 + lambda times the uniform box."""
    lam = Fraction(lam)
    uniform = Box(THREECYCLE, [QUARTER] * THREECYCLE.t)
    return mixture([1 - lam, lam], [threecycle_vertices()[8], uniform])
