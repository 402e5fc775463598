from __future__ import unicode_literals, absolute_import, division

import time
import logging
import multiprocessing
from fractions import Fraction

from six.moves import range

from .arith import ZERO, RatMatrix, rank, solve_unique, independent_rows, integer_vector, IntegerEchelon
from .box import is_deterministic, mixture
from .exceptions import InfeasibleError, InconsistencyError, ScenarioMismatch, ValidationError
from .polytope import local_hull_contains
from .utils import format_time


class Ensemble(object):
    """
    Weights over an ordered vertex set (zeros allowed) whose mixture is the
    target box.

    """
    __slots__ = ('vertex_set', 'weights')

    def __init__(self, vertex_set, weights):
        weights = tuple(Fraction(w) for w in weights)
        if len(weights) != len(vertex_set):
            raise ValidationError("Ensemble needs %d weights, got %d" % (len(vertex_set), len(weights)))
        if any(w < 0 for w in weights):
            raise ValidationError("Ensemble weights must be nonnegative")
        if sum(weights, ZERO) != 1:
            raise ValidationError("Ensemble weights must sum to 1")
        self.vertex_set = vertex_set
        self.weights = weights

    @classmethod
    def from_support(cls, vertex_set, support, weights):
        full = [ZERO] * len(vertex_set)
        for i, w in zip(support, weights):
            full[i] = Fraction(w)
        return cls(vertex_set, full)

    @property
    def support(self):
        return tuple(i for i, w in enumerate(self.weights) if w > 0)

    @property
    def size(self):
        return len(self.support)

    def support_weights(self):
        return tuple(self.weights[i] for i in self.support)

    def members(self):
        return [(self.weights[i], self.vertex_set[i]) for i in self.support]

    def labels(self):
        return [self.vertex_set.labels[i] for i in self.support]

    def box(self):
        weights, boxes = zip(*self.members())
        return mixture(weights, boxes)

    def sort_key(self):
        return (self.size, self.support)

    def __eq__(self, other):
        return isinstance(other, Ensemble) and self.weights == other.weights

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "Ensemble(%s)" % ", ".join("%s: %s" % (l, w) for l, w in zip(self.labels(), self.support_weights()))


class MinimalEnsembleReport(object):
    def __init__(self, target, ensembles, vertex_set):
        self.target = target
        self.ensembles = list(ensembles)
        self.vertex_set = vertex_set

    def __len__(self):
        return len(self.ensembles)

    def __iter__(self):
        return iter(self.ensembles)

    def __getitem__(self, index):
        return self.ensembles[index]

    @property
    def supports(self):
        return [e.support for e in self.ensembles]


def decompose_in_simplex(vertices, target):
    """
    Unique strictly positive weights of ``target`` over ``vertices``, or
    ``None`` when the system is inconsistent, underdetermined or has a
    non-positive weight.

    """
    vertices = list(vertices)
    if not vertices:
        raise ValidationError("Cannot decompose over an empty vertex subset")
    for v in vertices:
        if v.scenario != target.scenario:
            raise ScenarioMismatch("Vertex scenario %r differs from target %r" % (v.scenario.parties, target.scenario.parties))
    a = RatMatrix.from_columns([v.probabilities for v in vertices], target.scenario.t)
    weights = solve_unique(a, target.probabilities)
    if weights is None or any(w <= 0 for w in weights):
        return None
    return weights


# Subset search shared by the enumerator and its worker processes.
_shared = {}


def _init_worker(vectors, target, width, limit):
    _shared['vectors'] = vectors
    _shared['target'] = target
    _shared['width'] = width
    _shared['limit'] = limit


def _search_from(first):
    return _search(_shared['vectors'], _shared['target'], _shared['width'], first, _shared['limit'])


class _Enough(Exception):
    pass


def _search(vectors, target, width, first, limit=None):
    """
    Supports (position tuples starting at ``first``) of at most ``width``
    independent vectors whose span holds the target with strictly positive
    coordinates. A branch stops once the vectors become dependent or the
    target enters their span: any larger independent superset reproduces
    the same coordinates padded with zeros.

    """
    found = []
    n = len(vectors)
    chosen = [first]

    def visit(state, start):
        for j in range(start, n):
            nxt = state.add(vectors[j])
            if nxt is None:
                continue
            chosen.append(j)
            if nxt.spans_target:
                if nxt.positive():
                    found.append(tuple(chosen))
                    if limit and len(found) >= limit:
                        raise _Enough
            elif nxt.size < width:
                visit(nxt, j + 1)
            chosen.pop()

    state = IntegerEchelon(target, width).add(vectors[first])
    if state is None:
        return found
    try:
        if state.spans_target:
            if state.positive():
                found.append((first,))
        elif width > 1:
            visit(state, first + 1)
    except _Enough:
        pass
    return found


def _subset_search(columns, target, width=None, firsts=None, limit=None, jobs=1, log=logging):
    """
    Runs the subset search on rational ``columns`` for ``target``. Returns
    ``None`` when the target is outside their span, else the list of
    position supports.

    """
    matrix = RatMatrix.from_columns(columns, len(target))
    basis = independent_rows(matrix)
    if rank(matrix.augment(target)) != len(basis):
        return None
    if width is None:
        width = len(basis)
    vectors = [integer_vector([c[i] for i in basis]) for c in columns]
    projected = integer_vector([target[i] for i in basis])
    if firsts is None:
        firsts = range(len(columns))
    firsts = list(firsts)
    log.debug("Searching %d vectors projected onto %d independent rows", len(vectors), len(basis))

    if jobs > 1 and len(firsts) > 1 and not limit:
        pool = multiprocessing.Pool(jobs, initializer=_init_worker, initargs=(vectors, projected, width, limit))
        try:
            parts = pool.map(_search_from, firsts, chunksize=1)
        finally:
            pool.close()
            pool.join()
    else:
        parts = []
        remaining = limit
        for first in firsts:
            part = _search(vectors, projected, width, first, remaining)
            parts.append(part)
            if limit:
                remaining -= len(part)
                if remaining <= 0:
                    break
    return [s for part in parts for s in part]


def minimal_ensembles(target, vs, max_support=None, prune_nonlocal=False, jobs=1, log=logging):
    """
    All minimal ensembles of ``target`` over the vertex set ``vs``: the
    supports of at most ``max_support`` vertices (default: the affine
    dimension of ``vs`` plus one) carrying a unique strictly positive
    decomposition.

    With ``prune_nonlocal`` a target outside the local hull only explores
    supports holding at least one non-deterministic vertex.

    """
    if target.scenario != vs.scenario:
        raise ScenarioMismatch("Target scenario %r differs from vertex set %r" % (target.scenario.parties, vs.scenario.parties))
    if max_support is not None and max_support < 1:
        raise ValidationError("max_support must be at least 1")
    jobs = max(int(jobs or 1), 1)
    cpus = multiprocessing.cpu_count()
    if jobs > cpus:
        log.warning("Asked for %d jobs but only %d CPUs are available", jobs, cpus)

    start = time.time()
    n = len(vs)
    order = list(range(n))
    firsts = None
    if prune_nonlocal:
        required = [i for i, v in enumerate(vs) if not is_deterministic(v)]
        if required and len(required) < n and not local_hull_contains(target, vs, log=log):
            order = required + [i for i in range(n) if i not in set(required)]
            firsts = range(len(required))
            log.info("Target is non-local: every support must hold one of %d non-deterministic vertices", len(required))
    columns = [vs[i].probabilities for i in order]
    log.info("Searching minimal ensembles over %d vertices (max support %s, %d jobs)", n, max_support or "auto", jobs)
    found = _subset_search(columns, target.probabilities, max_support, firsts, jobs=jobs, log=log)
    if found is None:
        raise InfeasibleError("Target is outside the span of the vertex set")

    ensembles = {}
    for positions in found:
        support = tuple(sorted(order[p] for p in positions))
        weights = decompose_in_simplex([vs[i] for i in support], target)
        if weights is None:
            raise InconsistencyError("Support %r found by the search has no exact decomposition" % (support,))
        ensemble = Ensemble.from_support(vs, support, weights)
        ensembles[ensemble.weights] = ensemble
    if not ensembles:
        if max_support is None or find_ensemble(target, vs, log=log) is None:
            raise InfeasibleError("Target is outside the convex hull of the vertex set")
        log.info("No ensemble of %s vertices or fewer", max_support)
    result = sorted(ensembles.values(), key=Ensemble.sort_key)
    log.info("Found %d minimal ensembles in %s", len(result), format_time(time.time() - start))
    return MinimalEnsembleReport(target, result, vs)


def find_ensemble(target, vs, log=logging):
    """The first minimal ensemble found, or ``None`` when there is none."""
    found = _subset_search([v.probabilities for v in vs], target.probabilities, limit=1, log=log)
    if not found:
        return None
    support = found[0]
    return Ensemble.from_support(vs, support, decompose_in_simplex([vs[i] for i in support], target))


def check_identity(e, target):
    if e.vertex_set.scenario != target.scenario:
        raise ScenarioMismatch("Ensemble and target scenarios differ")
    if e.box() != target:
        raise ValidationError("Ensemble does not reproduce the target box")


def is_minimal(e, target):
    check_identity(e, target)
    weights = decompose_in_simplex([e.vertex_set[i] for i in e.support], target)
    return weights is not None and weights == e.support_weights()


def express_as_minimal_mix(target_ensemble, report):
    """
    A probability vector over ``report.ensembles`` mixing their weight
    vectors into ``target_ensemble.weights``. The smallest support, first
    in lexicographic order, is returned.

    """
    if target_ensemble.vertex_set is not report.vertex_set and target_ensemble.vertex_set.labels != report.vertex_set.labels:
        raise ScenarioMismatch("Ensemble and report use different vertex sets")
    check_identity(target_ensemble, report.target)
    columns = [e.weights for e in report.ensembles]
    target = target_ensemble.weights
    if columns:
        width = rank(RatMatrix.from_columns(columns, len(target)))
        for size in range(1, width + 1):
            found = _subset_search(columns, target, size, limit=1)
            if found is None:
                break
            if found:
                support = found[0]
                a = RatMatrix.from_columns([columns[k] for k in support], len(target))
                coefficients = solve_unique(a, target)
                q = [ZERO] * len(columns)
                for k, c in zip(support, coefficients):
                    q[k] = c
                return tuple(q)
    raise InconsistencyError("Ensemble is not a mixture of the minimal ensembles")


class Channel(object):
    """
    Stochastic map p(m|e); ``rows[m][e]`` is ``None`` where outcome ``e``
    never occurs.

    """

    def __init__(self, rows):
        self.rows = [tuple(r) for r in rows]

    def __getitem__(self, key):
        m, e = key
        return self.rows[m][e]

    def defined(self, e):
        return self.rows[0][e] is not None if self.rows else False

    def column(self, e):
        return tuple(r[e] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, Channel) and self.rows == other.rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "Channel(%r)" % (self.rows,)


def mixed_ensemble_channel(mixed, decompositions, vertex_set=None, target=None):
    """
    Post-processing channel from the pure ensemble ``r`` to the mixed
    ensemble ``mixed`` (pairs ``(p_m, member)``), where member ``m``
    decomposes with weights ``decompositions[m]`` over the vertex set.

    Returns ``(r, channel)`` with ``r_e = sum_m p_m q^m_e`` and
    ``p(m|e) = p_m q^m_e / r_e``.

    """
    mixed = [(Fraction(p), member) for p, member in mixed]
    decompositions = [tuple(Fraction(q) for q in qs) for qs in decompositions]
    if len(mixed) != len(decompositions):
        raise InconsistencyError("Need one decomposition per mixed member")
    if sum((p for p, _ in mixed), ZERO) != 1:
        raise InconsistencyError("Mixed ensemble weights must sum to 1")
    width = len(decompositions[0]) if decompositions else 0
    for (p, member), qs in zip(mixed, decompositions):
        if len(qs) != width or sum(qs, ZERO) != 1 or any(q < 0 for q in qs):
            raise InconsistencyError("Decomposition %r is not a probability vector" % (qs,))
        if vertex_set is not None:
            if len(vertex_set) != width:
                raise InconsistencyError("Decomposition length differs from the vertex set")
            if mixture(qs, vertex_set.vertices) != member:
                raise InconsistencyError("Decomposition does not reproduce its member box")
    if target is not None and mixture([p for p, _ in mixed], [m for _, m in mixed]) != target:
        raise InconsistencyError("Mixed ensemble does not reproduce the target box")

    r = tuple(sum((p * qs[e] for (p, _), qs in zip(mixed, decompositions)), ZERO) for e in range(width))
    rows = []
    for (p, _), qs in zip(mixed, decompositions):
        rows.append([p * qs[e] / r[e] if r[e] else None for e in range(width)])
    return r, Channel(rows)
