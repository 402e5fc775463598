"""
Reference boxes, ensembles, channels and extension tables.

Tables of extensions are written the way they are usually printed: one row
per (input, output) of the row party and one column per (input, output) of
the column party, inputs major and outputs minor.

"""
from __future__ import unicode_literals, absolute_import, division

import os
from collections import OrderedDict
from fractions import Fraction as F

from .box import Scenario, Box
from .polytope import VertexSet, isotropic_box, threecycle_box

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'fixtures')

H = F(1, 2)
T = F(1, 3)


def single_box(distributions):
    """One party; ``distributions[x]`` is p(.|x)."""
    scenario = Scenario([[len(d) for d in distributions]])
    return Box(scenario, [p for d in distributions for p in d])


def _offsets(cards):
    offsets = []
    total = 0
    for d in cards:
        offsets.append(total)
        total += d
    return offsets


def table_box(row_cards, col_cards, rows, row_party=1):
    """
    Two-party box from a table; ``row_party`` says whether the rows belong
    to the first (0) or the second (1) party.

    """
    if len(rows) != sum(row_cards) or any(len(r) != sum(col_cards) for r in rows):
        raise ValueError("Table shape does not match its cardinalities")
    roff = _offsets(row_cards)
    coff = _offsets(col_cards)
    parties = (col_cards, row_cards) if row_party else (row_cards, col_cards)
    scenario = Scenario(parties)

    def p(a, x):
        if row_party:
            (cx, ca), (rz, re) = (x[0], a[0]), (x[1], a[1])
        else:
            (rz, re), (cx, ca) = (x[0], a[0]), (x[1], a[1])
        return F(rows[roff[rz] + re][coff[cx] + ca])
    return Box.from_function(scenario, p)


# Single binary party

MAXIMALLY_MIXED = single_box([[H, H], [H, H]])

BIASED = single_box([[T, 2 * T], [2 * T, T]])


def square_vertices():
    """The four deterministic boxes of one party with two binary inputs, named P_0..P_3."""
    boxes = [
        single_box([[1, 0], [1, 0]]),
        single_box([[0, 1], [0, 1]]),
        single_box([[1, 0], [0, 1]]),
        single_box([[0, 1], [1, 0]]),
    ]
    return VertexSet(boxes[0].scenario, boxes, ["P_0", "P_1", "P_2", "P_3"])


# Over square_vertices()
BIASED_ENSEMBLES = (
    ((0, 1, 3), (T, T, T)),
    ((2, 3), (T, 2 * T)),
)

PR_EXTENSION = table_box((2, 2), (2, 2), [
    [H, 0, H, 0],
    [0, H, 0, H],
    [H, 0, 0, H],
    [0, H, H, 0],
])

BIASED_EXTENSION = table_box((3, 2), (2, 2), [
    [T, 0, T, 0],
    [0, T, 0, T],
    [0, T, T, 0],
    [T, 0, 0, T],
    [0, 2 * T, 2 * T, 0],
])

# outcomes 1 and 2 of the first extending input merged
MERGED_EXTENSION = table_box((2, 2), (2, 2), [
    [T, 0, T, 0],
    [0, 2 * T, T, T],
    [T, 0, 0, T],
    [0, 2 * T, 2 * T, 0],
])

# every input padded to three outcomes, extending inputs swapped
PADDED_EXTENSION = table_box((3, 3), (3, 3), [
    [T, 0, 0, 0, T, 0],
    [0, 2 * T, 0, 2 * T, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [T, 0, 0, T, 0, 0],
    [0, T, 0, 0, T, 0],
    [0, T, 0, T, 0, 0],
])

CONJUGATE_BOX = single_box([[T, T, T], [T, 2 * T]])

# rows: the conjugate party (3 and 2 outcomes); columns: its extension
CONJUGATE_EXTENSION = table_box((3, 2), (3, 3, 3), [
    [T, 0, 0, 0, T, 0, T, 0, 0],
    [0, T, 0, T, 0, 0, 0, T, 0],
    [0, 0, T, 0, 0, T, 0, 0, T],
    [T, 0, 0, 0, 0, T, 0, T, 0],
    [0, T, T, T, T, 0, T, 0, T],
], row_party=0)


# Mixed ensembles of BIASED with their decompositions over square_vertices()

MIXED_EXAMPLE = (
    (F(33, 81), single_box([[F(1, 5), F(4, 5)], [F(2, 5), F(3, 5)]]), (0, F(2, 5), F(1, 5), F(2, 5))),
    (F(32, 81), single_box([[F(1, 5), F(4, 5)], [F(9, 10), F(1, 10)]]), (F(1, 10), 0, F(1, 10), F(4, 5))),
    (F(16, 81), single_box([[F(7, 8), F(1, 8)], [F(3, 4), F(1, 4)]]), (F(3, 4), F(1, 8), F(1, 8), 0)),
)

MIXED_EXAMPLE_PURE = (F(76, 405), F(76, 405), F(59, 405), F(194, 405))

MIXED_EXAMPLE_CHANNEL = (
    (0, F(33, 38), F(33, 59), F(33, 97)),
    (F(4, 19), 0, F(16, 59), F(64, 97)),
    (F(15, 19), F(5, 38), F(10, 59), 0),
)

# probabilities of the two minimal ensembles in BIASED_ENSEMBLES order
MIXED_EXAMPLE_COIN = (F(76, 135), F(59, 135))

BIASED_COIN_EXAMPLE = (
    (F(2, 5), single_box([[F(5, 6), F(1, 6)], [1, 0]]), (F(5, 6), 0, 0, F(1, 6))),
    (F(3, 5), single_box([[0, 1], [F(4, 9), F(5, 9)]]), (0, F(5, 9), 0, F(4, 9))),
)

BIASED_COIN_CHANNEL = (
    (1, 0, None, F(1, 5)),
    (0, 1, None, F(4, 5)),
)

MIXED_MENU_EXTENSION = table_box((3, 2), (2, 2), [
    [F(11, 135), F(44, 135), F(22, 135), F(11, 45)],
    [F(32, 405), F(128, 405), F(16, 45), F(16, 405)],
    [F(14, 81), F(2, 81), F(4, 27), F(4, 81)],
    [T, F(1, 15), F(2, 5), 0],
    [0, F(3, 5), F(4, 15), T],
])


# 3-cycle

THREECYCLE_ENSEMBLES = (
    (2, 5, 8),
    (3, 4, 8, 9),
    (1, 6, 8, 10),
    (0, 7, 8, 11),
    (8, 9, 10, 11),
    (1, 2, 3, 7, 8),
    (0, 4, 5, 6, 8),
    (0, 1, 3, 4, 6, 7, 8),
)


def threecycle_weights(lam):
    """Weights of THREECYCLE_ENSEMBLES (in support order) along the mixing line."""
    lam = F(lam)
    q = lam / 4
    return (
        (q, q, 1 - lam / 2),
        (q, q, 1 - lam, lam / 2),
        (q, q, 1 - lam, lam / 2),
        (q, q, 1 - lam, lam / 2),
        (1 - 3 * lam / 4, q, q, q),
        (q, q, q, q, 1 - lam),
        (q, q, q, q, 1 - lam),
        (q, q, q, q, q, q, 1 - 3 * lam / 2),
    )


def threecycle_extension(lam):
    """Complete extension of the 3-cycle box, the extending party in rows."""
    lam = F(lam)
    q = lam / 4
    w = (2 - lam) / 4
    h = (1 - lam) / 2
    f = (4 - 3 * lam) / 8
    g = lam / 8
    k = (2 - 3 * lam) / 4
    o = 0

    def c0(v):
        return [v, o, o, v, v, o, o, v, o, v, v, o]

    rows = [
        [o, q, o, o, o, o, q, o, q, o, o, o],
        [o, o, q, o, o, q, o, o, o, o, o, q],
        c0(w),

        [o, o, q, o, q, o, o, o, o, q, o, o],
        [o, q, o, o, o, o, o, q, o, o, q, o],
        c0(h),
        [q, o, o, q, o, q, q, o, q, o, o, q],

        [q, o, o, o, o, q, o, o, o, o, q, o],
        [o, o, o, q, o, o, q, o, o, q, o, o],
        c0(h),
        [o, q, q, o, q, o, o, q, q, o, o, q],

        [q, o, o, o, q, o, o, o, q, o, o, o],
        [o, o, o, q, o, o, o, q, o, o, o, q],
        c0(h),
        [o, q, q, o, o, q, q, o, o, q, q, o],

        c0(f),
        [g, o, o, g, o, g, g, o, g, o, o, g],
        [o, g, g, o, g, o, o, g, g, o, o, g],
        [o, g, g, o, o, g, g, o, o, g, g, o],

        [q, o, o, o, o, q, o, o, o, o, q, o],
        [o, q, o, o, o, o, q, o, q, o, o, o],
        [o, o, q, o, q, o, o, o, o, q, o, o],
        [o, o, o, q, o, o, o, q, o, o, o, q],
        c0(h),

        [q, o, o, o, q, o, o, o, q, o, o, o],
        [o, q, o, o, o, o, o, q, o, o, q, o],
        [o, o, q, o, o, q, o, o, o, o, o, q],
        [o, o, o, q, o, o, q, o, o, q, o, o],
        c0(h),

        [q, o, o, o, q, o, o, o, q, o, o, o],
        [q, o, o, o, o, q, o, o, o, o, q, o],
        [o, o, q, o, q, o, o, o, o, q, o, o],
        [o, q, o, o, o, o, o, q, o, o, q, o],
        [o, o, o, q, o, o, q, o, o, q, o, o],
        [o, o, o, q, o, o, o, q, o, o, o, q],
        c0(k),
    ]
    return table_box((3, 4, 4, 4, 4, 5, 5, 7), (4, 4, 4), rows)


# Isotropic line

def isotropic_supports():
    """Supports (as label lists) of the minimal ensembles of B_eta for 3/4 < eta < 1."""
    with open(os.path.join(FIXTURES_DIR, 'isotropic_supports.txt')) as fp:
        return [tuple(line.split()) for line in fp if line.strip()]


def fixtures():
    """Every reference box, keyed by file name."""
    return OrderedDict([
        ('maximally_mixed', MAXIMALLY_MIXED),
        ('pr_extension', PR_EXTENSION),
        ('biased', BIASED),
        ('biased_extension', BIASED_EXTENSION),
        ('merged_extension', MERGED_EXTENSION),
        ('padded_extension', PADDED_EXTENSION),
        ('conjugate_box', CONJUGATE_BOX),
        ('conjugate_extension', CONJUGATE_EXTENSION),
        ('mixed_menu_extension', MIXED_MENU_EXTENSION),
        ('threecycle_half', threecycle_box(H)),
        ('threecycle_extension_half', threecycle_extension(H)),
        ('isotropic_four_fifths', isotropic_box(F(4, 5))),
    ])
