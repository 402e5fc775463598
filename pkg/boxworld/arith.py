from __future__ import unicode_literals, absolute_import, division

import re
from fractions import Fraction
from functools import reduce

import six
from six.moves import range

try:
    from math import gcd as _gcd
except ImportError:
    from fractions import gcd as _gcd

from .exceptions import FormatError, ValidationError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RATIONAL_RE = re.compile(r'^\s*([-+]?\d+)(?:\s*/\s*(\d+))?\s*$')


def gcd(a, b):
    return abs(_gcd(a, b))


def parse_rational(value):
    """
    Parses the exact text form of a rational: "n/d" with an optional sign,
    or "n" for integers. Decimal floats are refused.

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise FormatError("Expected a rational, got %r" % (value,))
    if isinstance(value, six.integer_types):
        return Fraction(value)
    if not isinstance(value, six.string_types):
        raise FormatError("Expected a rational string, got %r" % (value,))
    match = RATIONAL_RE.match(value)
    if not match:
        raise FormatError("Invalid rational: %r" % value)
    numerator, denominator = match.groups()
    denominator = int(denominator) if denominator else 1
    if not denominator:
        raise FormatError("Zero denominator: %r" % value)
    return Fraction(int(numerator), denominator)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return "%d" % value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def bit_size(value):
    return value.numerator.bit_length() + value.denominator.bit_length()


def dot(u, v):
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


class RatMatrix(object):
    """
    Immutable row-major matrix of rationals.

    """
    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows, cols, entries=None):
        if entries is None:
            entries = (ZERO,) * (rows * cols)
        else:
            entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValidationError("Matrix of %sx%s needs %s entries, got %s" % (rows, cols, rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValidationError("Ragged matrix rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows(zip(*columns) if columns else [()] * rows, len(columns))

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return RatMatrix.from_rows([self.column(j) for j in range(self.cols)], self.rows)

    def augment(self, vector):
        vector = tuple(vector)
        if len(vector) != self.rows:
            raise ValidationError("Cannot augment %s rows with %s entries" % (self.rows, len(vector)))
        return RatMatrix.from_rows([r + (v,) for r, v in zip(self.to_rows(), vector)], self.cols + 1)

    def select_columns(self, columns):
        return RatMatrix.from_rows([tuple(r[j] for j in columns) for r in self.to_rows()], len(columns))

    def select_rows(self, rows):
        return RatMatrix.from_rows([self.row(i) for i in rows], self.cols)

    def __mul__(self, vector):
        return tuple(dot(r, vector) for r in self.to_rows())

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "RatMatrix(%s, %s, [%s])" % (self.rows, self.cols, ", ".join(format_rational(e) for e in self.entries))


def _rref(rows, cols):
    """
    Reduced row echelon form of a list of rational rows. Pivot columns are
    taken left to right; among the candidate rows the entry with the
    smallest bit size is used as pivot.

    Returns the non-zero reduced rows and the list of pivot columns.

    """
    rows = [list(r) for r in rows]
    pivots = []
    top = 0
    for c in range(cols):
        if top == len(rows):
            break
        best = None
        for i in range(top, len(rows)):
            value = rows[i][c]
            if value:
                size = bit_size(value)
                if best is None or size < best[0]:
                    best = (size, i)
        if best is None:
            continue
        i = best[1]
        rows[top], rows[i] = rows[i], rows[top]
        pivot = rows[top][c]
        pivot_row = [v / pivot if v else v for v in rows[top]]
        rows[top] = pivot_row
        for i in range(len(rows)):
            if i != top:
                factor = rows[i][c]
                if factor:
                    rows[i] = [a - factor * b if b else a for a, b in zip(rows[i], pivot_row)]
        pivots.append(c)
        top += 1
    return rows[:top], pivots


def rank(m):
    """Exact rank over the rationals."""
    if m.rows > m.cols:
        m = m.transpose()
    return len(_rref(m.to_rows(), m.cols)[1])


def solve_unique(a, c):
    """
    Solves ``a x = c``. Returns the solution only when the system is
    consistent and the solution is unique, ``None`` otherwise.

    """
    c = tuple(c)
    if a.rows != len(c):
        raise ValidationError("Right hand side has %s entries for %s rows" % (len(c), a.rows))
    rows, pivots = _rref([r + (v,) for r, v in zip(a.to_rows(), c)], a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None  # inconsistent
    if len(pivots) != a.cols:
        return None  # underdetermined
    return tuple(Fraction(r[-1]) for r in rows)


def nullspace(a):
    """Basis of the right nullspace; empty when the columns are independent."""
    rows, pivots = _rref(a.to_rows(), a.cols)
    free = [j for j in range(a.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        vector = [ZERO] * a.cols
        vector[f] = ONE
        for r, p in zip(rows, pivots):
            vector[p] = -r[f]
        basis.append(tuple(vector))
    return basis


def independent_rows(m):
    """Indices of the first rows (in order) forming a basis of the row space."""
    echelon = {}
    selected = []
    for i in range(m.rows):
        row = list(m.row(i))
        for p in sorted(echelon):
            value = row[p]
            if value:
                prow = echelon[p]
                row = [a - value * b if b else a for a, b in zip(row, prow)]
        pivot = next((j for j, v in enumerate(row) if v), None)
        if pivot is None:
            continue
        value = row[pivot]
        row = [v / value for v in row]
        for p, prow in list(echelon.items()):
            if prow[pivot]:
                f = prow[pivot]
                echelon[p] = [a - f * b for a, b in zip(prow, row)]
        echelon[pivot] = row
        selected.append(i)
    return selected


def integer_vector(vector):
    """Scales a rational vector by the lcm of its denominators."""
    scale = 1
    for v in vector:
        d = v.denominator
        scale = scale * d // gcd(scale, d)
    return tuple(int(v * scale) for v in vector)


def _normalize(values):
    g = reduce(gcd, values, 0)
    if g > 1:
        return [v // g for v in values]
    return values


class IntegerEchelon(object):
    """
    Fraction-free incremental elimination over the integers.

    Holds the linearly independent vectors u_0..u_{k-1} added so far as
    echelon rows ``(pivot, vec, coeffs)`` with ``vec = sum(coeffs[i] u_i)``,
    and a target U kept as ``scale U = tvec + sum(tcoef[i] u_i)``. Once
    ``tvec`` vanishes U lies in the span and its coordinates are
    ``tcoef[i] / scale``. States are immutable: ``add`` returns a new one.

    """
    __slots__ = ('rows', 'size', 'width', 'scale', 'tvec', 'tcoef')

    def __init__(self, target, width, rows=(), size=0, scale=1, tcoef=None):
        self.rows = rows
        self.size = size
        self.width = width
        self.scale = scale
        self.tvec = list(target)
        self.tcoef = tcoef if tcoef is not None else [0] * width

    def add(self, vector):
        """Returns the extended state, or ``None`` when vector is dependent."""
        vec = list(vector)
        coeffs = [0] * self.width
        coeffs[self.size] = 1
        for pivot, rvec, rcoeffs in self.rows:
            value = vec[pivot]
            if value:
                head = rvec[pivot]
                vec = [head * a - value * b for a, b in zip(vec, rvec)]
                coeffs = [head * a - value * b for a, b in zip(coeffs, rcoeffs)]
        pivot = None
        for j, v in enumerate(vec):
            if v and (pivot is None or abs(v) < abs(vec[pivot])):
                pivot = j
        if pivot is None:
            return None
        merged = _normalize(vec + coeffs)
        n = len(vec)
        vec, coeffs = merged[:n], merged[n:]

        scale, tvec, tcoef = self.scale, self.tvec, self.tcoef
        value = tvec[pivot]
        if value:
            head = vec[pivot]
            scale = head * scale
            tvec = [head * a - value * b for a, b in zip(tvec, vec)]
            tcoef = [head * a + value * b for a, b in zip(tcoef, coeffs)]
            merged = _normalize([scale] + tvec + tcoef)
            scale, tvec, tcoef = merged[0], merged[1:n + 1], merged[n + 1:]

        state = IntegerEchelon.__new__(IntegerEchelon)
        state.rows = self.rows + ((pivot, vec, coeffs),)
        state.size = self.size + 1
        state.width = self.width
        state.scale = scale
        state.tvec = tvec
        state.tcoef = tcoef
        return state

    @property
    def spans_target(self):
        return not any(self.tvec)

    def positive(self):
        """True when the target's coordinates on the added vectors are all > 0."""
        if self.scale > 0:
            return all(c > 0 for c in self.tcoef[:self.size])
        return all(c < 0 for c in self.tcoef[:self.size])

    def coordinates(self):
        return tuple(Fraction(c, self.scale) for c in self.tcoef[:self.size])
