from __future__ import unicode_literals, absolute_import

import unittest
from fractions import Fraction as F

from boxworld import catalog
from boxworld.box import is_deterministic, relabel
from boxworld.exceptions import CapExceeded, ScenarioMismatch, SignalingError, ValidationError
from boxworld.polytope import (constraint_system, ns_dimension, is_vertex, deterministic_vertices, barrett_2222_vertices,
                               nonlocal_box, threecycle_system, threecycle_vertices, threecycle_box, enumerate_vertices,
                               local_hull_contains, isotropic_box, VertexSet, THREECYCLE)

from .test_box import signaling_box


class TestDimensions(unittest.TestCase):

    def test_binary_pair(self):
        system = constraint_system(((2, 2), (2, 2)))
        self.assertEqual(system.t, 16)
        self.assertEqual(system.rank, 8)
        self.assertEqual(system.effective_dimension, 8)
        self.assertEqual(ns_dimension(((2, 2), (2, 2))), 8)

    def test_closed_form_matches_rank(self):
        for parties in [((2, 2),), ((3, 2),), ((2, 2), (3, 2)), ((3, 3), (3, 3)), ((2, 2), (2, 2), (2, 2))]:
            self.assertEqual(constraint_system(parties).effective_dimension, ns_dimension(parties), parties)

    def test_satisfies(self):
        system = constraint_system(catalog.BIASED_EXTENSION.scenario)
        self.assertTrue(system.satisfies(catalog.BIASED_EXTENSION.probabilities))
        swapped = list(catalog.BIASED_EXTENSION.probabilities)
        swapped[0], swapped[1] = swapped[1], swapped[0]
        self.assertFalse(system.satisfies(swapped))

    def test_threecycle_system(self):
        system = threecycle_system()
        self.assertEqual(system.extra, 3)
        self.assertEqual(system.effective_dimension, 6)
        for v in threecycle_vertices():
            self.assertTrue(system.satisfies(v.probabilities))

    def test_extra_row_length(self):
        with self.assertRaises(ValidationError):
            constraint_system(((2, 2),), [(1, 0)])


class TestVertexTest(unittest.TestCase):

    def test_nonlocal_box(self):
        self.assertEqual(is_vertex(nonlocal_box(0, 0, 0)), (True, 16, 16))

    def test_isotropic_interior(self):
        vertex, tight, t = is_vertex(isotropic_box(F(3, 4)))
        self.assertFalse(vertex)
        self.assertEqual(t, 16)
        self.assertEqual(tight, 8)

    def test_pr_extension(self):
        self.assertTrue(is_vertex(catalog.PR_EXTENSION)[0])

    def test_biased_extension_is_not_a_vertex(self):
        self.assertFalse(is_vertex(catalog.BIASED_EXTENSION)[0])

    def test_signaling_box(self):
        with self.assertRaises(SignalingError):
            is_vertex(signaling_box())

    def test_system_mismatch(self):
        with self.assertRaises(ScenarioMismatch):
            is_vertex(catalog.BIASED, threecycle_system())

    def test_threecycle_vertices(self):
        system = threecycle_system()
        for v in threecycle_vertices():
            self.assertTrue(is_vertex(v, system)[0])
        self.assertFalse(is_vertex(threecycle_box(F(1, 2)), system)[0])

    def test_no_disturbance_violation(self):
        # a box where the shared value disagrees between contexts
        b = catalog.single_box([[1, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]])
        self.assertEqual(b.scenario, THREECYCLE)
        with self.assertRaises(ValidationError):
            is_vertex(b, threecycle_system())


class TestVertexSets(unittest.TestCase):

    def test_deterministic(self):
        vs = deterministic_vertices(((2, 2),))
        self.assertEqual(vs.labels, ["D_00", "D_01", "D_10", "D_11"])
        self.assertEqual(vs[vs.index("D_01")], catalog.square_vertices()[2])
        self.assertEqual(len(deterministic_vertices(((2, 2), (2, 2)))), 16)
        self.assertEqual(deterministic_vertices(((2, 2), (3,))).labels[-1], "D_11.2")

    def test_barrett(self):
        vs = barrett_2222_vertices()
        self.assertEqual(len(vs), 24)
        self.assertEqual(vs.index("B_000"), 16)
        self.assertEqual(vs.index("L_0000"), 0)
        self.assertEqual(vs[16], nonlocal_box(0, 0, 0))
        self.assertEqual(sum(1 for v in vs if is_deterministic(v)), 16)
        for v in vs:
            self.assertTrue(is_vertex(v)[0])

    def test_barrett_local_labels(self):
        vs = barrett_2222_vertices()
        # L_1001: a = x, b = 1
        v = vs[vs.index("L_1001")]
        self.assertEqual(v[(1, 1), (1, 0)], 1)
        self.assertEqual(v[(0, 1), (0, 1)], 1)

    def test_threecycle(self):
        vs = threecycle_vertices()
        self.assertEqual(len(vs), 12)
        self.assertEqual(vs.labels[8], "C_0")
        self.assertEqual(sum(1 for v in vs if is_deterministic(v)), 8)

    def test_duplicates_rejected(self):
        square = catalog.square_vertices()
        with self.assertRaises(ValidationError):
            VertexSet(square.scenario, [square[0], square[0]])

    def test_enumerate_single_party(self):
        vs = enumerate_vertices(((3, 2),))
        self.assertEqual(len(vs), 6)
        self.assertEqual(set(v.probabilities for v in vs), set(v.probabilities for v in deterministic_vertices(((3, 2),))))
        self.assertTrue(all(label.startswith("D_") for label in vs.labels))

    def test_enumerate_binary_pair(self):
        vs = enumerate_vertices(((2, 2), (2, 2)))
        self.assertEqual(set(v.probabilities for v in vs), set(v.probabilities for v in barrett_2222_vertices()))
        self.assertEqual(sum(1 for label in vs.labels if label.startswith("V_")), 8)

    def test_enumerate_three_outcomes(self):
        vs = enumerate_vertices(((3, 3),))
        self.assertEqual(len(vs), 9)
        self.assertTrue(all(is_deterministic(v) for v in vs))

    def test_enumerated_labels_are_consecutive(self):
        vs = enumerate_vertices(((2, 2), (2, 2)))
        self.assertEqual([label for label in vs.labels if label.startswith("V_")], ["V_%d" % k for k in range(8)])

    def test_enumerate_threecycle(self):
        vs = enumerate_vertices(threecycle_system())
        self.assertEqual(set(v.probabilities for v in vs), set(v.probabilities for v in threecycle_vertices()))

    def test_enumerate_cap(self):
        with self.assertRaises(CapExceeded):
            enumerate_vertices(((2, 2), (2, 2)), cap=4)


class TestLocalHull(unittest.TestCase):

    def test_isotropic_line(self):
        self.assertTrue(local_hull_contains(isotropic_box(F(1, 2))))
        self.assertTrue(local_hull_contains(isotropic_box(F(3, 4))))
        self.assertFalse(local_hull_contains(isotropic_box(F(4, 5))))
        self.assertFalse(local_hull_contains(nonlocal_box(0, 0, 0)))

    def test_deterministic_members_of_a_vertex_set(self):
        vs = barrett_2222_vertices()
        self.assertTrue(local_hull_contains(isotropic_box(F(3, 4)), vs))
        self.assertFalse(local_hull_contains(isotropic_box(F(4, 5)), vs))

    def test_noncontextual_hull(self):
        vs = threecycle_vertices()
        self.assertFalse(local_hull_contains(threecycle_box(F(1, 2)), vs))
        self.assertTrue(local_hull_contains(threecycle_box(F(3, 4)), vs))


class TestTightRanks(unittest.TestCase):

    def test_biased_extension(self):
        self.assertEqual(is_vertex(catalog.BIASED_EXTENSION), (False, 19, 20))

    def test_maximally_mixed(self):
        self.assertEqual(is_vertex(catalog.MAXIMALLY_MIXED), (False, 2, 4))

    def test_relabeling_keeps_tight_rank(self):
        relabeled = relabel(catalog.BIASED_EXTENSION, {1: ([1, 0], [[2, 0, 1], [1, 0]])})
        self.assertEqual(is_vertex(relabeled), (False, 19, 20))
        swapped = relabel(catalog.PR_EXTENSION, {0: ([1, 0], None), 1: (None, [[1, 0], [0, 1]])})
        self.assertEqual(is_vertex(swapped), is_vertex(catalog.PR_EXTENSION))
        self.assertTrue(is_vertex(swapped)[0])

    def test_extension_scenario(self):
        system = constraint_system(catalog.BIASED_EXTENSION.scenario)
        self.assertEqual((system.t, system.rank), (20, 9))


if __name__ == '__main__':
    unittest.main()
