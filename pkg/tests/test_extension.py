from __future__ import unicode_literals, absolute_import

import unittest
from collections import Counter
from fractions import Fraction as F

from boxworld import catalog
from boxworld.bell import merge_outputs, pad_outputs
from boxworld.box import Box, condition, marginal, relabel, is_deterministic, is_nonsignaling, same_up_to_relabeling
from boxworld.exceptions import SignalingError, ValidationError
from boxworld.extension import (ExtensionSpec, complete_extension_spec, complete_extension, arbitrary_extension,
                                conjugate_box, conjugate_extension, pad_to_rectangular, grid_boxes, purification_census)
from boxworld.ensembles import minimal_ensembles
from boxworld.polytope import deterministic_vertices, barrett_2222_vertices, nonlocal_box, is_vertex

from .test_box import signaling_box


class TestCompleteExtension(unittest.TestCase):

    def test_maximally_mixed(self):
        ce = complete_extension(catalog.MAXIMALLY_MIXED, catalog.square_vertices())
        self.assertEqual(ce, catalog.PR_EXTENSION)
        self.assertTrue(is_vertex(ce)[0])

    def test_biased(self):
        spec = complete_extension_spec(catalog.BIASED, catalog.square_vertices())
        self.assertEqual(spec.sizes, (2, 3))
        self.assertEqual(spec.labels, [["P_2", "P_3"], ["P_0", "P_1", "P_3"]])
        ce = spec.build()
        self.assertEqual(relabel(ce, {1: ([1, 0], None)}), catalog.BIASED_EXTENSION)

    def test_biased_lexicographic(self):
        ce = complete_extension(catalog.BIASED, deterministic_vertices(((2, 2),)))
        self.assertEqual(relabel(ce, {1: ([1, 0], [[0, 1], [0, 2, 1]])}), catalog.BIASED_EXTENSION)
        self.assertTrue(same_up_to_relabeling(ce, catalog.BIASED_EXTENSION, 1))

    def test_marginal_is_the_base(self):
        ce = complete_extension(catalog.BIASED, catalog.square_vertices())
        self.assertTrue(is_nonsignaling(ce))
        self.assertEqual(marginal(ce, [0]), catalog.BIASED)

    def test_vertex_base(self):
        ce = complete_extension(nonlocal_box(0, 0, 0), barrett_2222_vertices())
        self.assertEqual(ce.scenario.parties, ((2, 2), (2, 2), (1,)))
        self.assertEqual(ce.probabilities, nonlocal_box(0, 0, 0).probabilities)

    def test_signaling_base(self):
        with self.assertRaises(SignalingError):
            complete_extension(signaling_box(), deterministic_vertices(((2, 2), (2, 2))))

    def test_conditioning_recovers_the_menu(self):
        cases = [
            (catalog.MAXIMALLY_MIXED, catalog.square_vertices()),
            (catalog.BIASED, catalog.square_vertices()),
            (catalog.CONJUGATE_BOX, deterministic_vertices(catalog.CONJUGATE_BOX.scenario)),
        ]
        for base, vs in cases:
            spec = complete_extension_spec(base, vs)
            ce = spec.build()
            party = ce.scenario.n - 1
            for z, entry in enumerate(spec.ensemble_menu):
                for e, (weight, member) in enumerate(entry):
                    self.assertEqual(condition(ce, party, z, e), (weight, member))


class TestArbitraryExtension(unittest.TestCase):

    def test_mixed_menu(self):
        menu = [
            [(w, b) for w, b, _ in catalog.MIXED_EXAMPLE],
            [(w, b) for w, b, _ in catalog.BIASED_COIN_EXAMPLE],
        ]
        ext = arbitrary_extension(catalog.BIASED, menu)
        self.assertEqual(ext, catalog.MIXED_MENU_EXTENSION)
        self.assertEqual(marginal(ext, [0]), catalog.BIASED)

    def test_menu_must_reproduce_the_base(self):
        square = catalog.square_vertices()
        with self.assertRaises(ValidationError):
            ExtensionSpec(catalog.BIASED, [[(F(1, 2), square[0]), (F(1, 2), square[1])]])

    def test_menu_weights(self):
        square = catalog.square_vertices()
        with self.assertRaises(ValidationError):
            ExtensionSpec(catalog.BIASED, [[(F(1, 3), square[2]), (F(1, 3), square[3])]])
        with self.assertRaises(ValidationError):
            ExtensionSpec(catalog.BIASED, [])
        with self.assertRaises(ValidationError):
            ExtensionSpec(catalog.BIASED, [[]])

    def test_member_scenario(self):
        with self.assertRaises(ValidationError):
            ExtensionSpec(catalog.BIASED, [[(1, catalog.CONJUGATE_BOX)]])


class TestConjugate(unittest.TestCase):

    def test_conjugate_box(self):
        self.assertEqual(conjugate_box(catalog.BIASED_EXTENSION), catalog.CONJUGATE_BOX)
        self.assertEqual(conjugate_box(catalog.BIASED_EXTENSION, 0), catalog.BIASED)

    def test_conjugate_extension(self):
        ce = conjugate_extension(catalog.BIASED_EXTENSION)
        self.assertEqual(ce.scenario.parties, ((3, 2), (3, 3, 3)))
        self.assertTrue(same_up_to_relabeling(ce, catalog.CONJUGATE_EXTENSION, 1))
        self.assertEqual(marginal(ce, [0]), catalog.CONJUGATE_BOX)


class TestReshaping(unittest.TestCase):

    def test_merged(self):
        merged = merge_outputs(catalog.BIASED_EXTENSION, 1, 0, [0, 1, 1])
        self.assertEqual(merged, catalog.MERGED_EXTENSION)
        self.assertEqual(marginal(merged, [0]), catalog.BIASED)

    def test_padded(self):
        b = catalog.BIASED_EXTENSION
        b = pad_outputs(b, 0, 0, 3)
        b = pad_outputs(b, 0, 1, 3)
        b = pad_outputs(b, 1, 1, 3)
        self.assertEqual(relabel(b, {1: ([1, 0], None)}), catalog.PADDED_EXTENSION)

    def test_pad_to_rectangular(self):
        padded = pad_to_rectangular(catalog.BIASED_EXTENSION, 1)
        self.assertEqual(padded.scenario.parties, ((2, 2), (3, 3)))
        self.assertEqual(marginal(padded, [0]), catalog.BIASED)
        self.assertEqual(pad_to_rectangular(catalog.PR_EXTENSION), catalog.PR_EXTENSION)


class TestCensus(unittest.TestCase):

    def test_grid(self):
        self.assertEqual(len(grid_boxes(((2,),), 2)), 3)
        self.assertEqual(len(grid_boxes(((2, 2),), 2)), 9)
        self.assertEqual(len(grid_boxes(((3,),), 2)), 6)
        with self.assertRaises(ValidationError):
            grid_boxes(((2,), (2,)), 2)

    def test_edge_and_interior_boxes(self):
        scenario = catalog.MAXIMALLY_MIXED.scenario
        vs = deterministic_vertices(scenario)
        shapes = Counter()
        for b in grid_boxes(scenario, 6):
            report = minimal_ensembles(b, vs)
            interior = all(0 < p < 1 for p in b.probabilities)
            self.assertEqual(len(report), 2 if interior else 1, b)
            if is_deterministic(b):
                self.assertEqual(report.supports, [(vs.vertices.index(b),)])
            shapes[len(report), tuple(sorted(e.size for e in report))] += 1
        self.assertEqual(shapes, Counter({(2, (3, 3)): 100, (2, (2, 3)): 20, (2, (2, 2)): 1, (1, (2,)): 44, (1, (1,)): 4}))

    def test_purification_census(self):
        scenario = catalog.MAXIMALLY_MIXED.scenario
        vs = deterministic_vertices(scenario)
        purified = purification_census(scenario, vs, max_denominator=8)
        self.assertEqual(len(purified), 5)
        self.assertIn(catalog.MAXIMALLY_MIXED, purified)
        self.assertNotIn(catalog.BIASED, purified)
        for v in vs:
            self.assertIn(v, purified)

    def test_given_grid(self):
        scenario = catalog.MAXIMALLY_MIXED.scenario
        vs = deterministic_vertices(scenario)
        grid = [catalog.BIASED, catalog.MAXIMALLY_MIXED, Box(scenario, [1, 0, F(1, 2), F(1, 2)])]
        self.assertEqual(purification_census(scenario, vs, grid=grid), [catalog.MAXIMALLY_MIXED])


class TestMenus(unittest.TestCase):

    def test_minimal_menu_is_the_complete_extension(self):
        report = minimal_ensembles(catalog.BIASED, catalog.square_vertices())
        ext = arbitrary_extension(catalog.BIASED, [e.members() for e in report])
        self.assertEqual(ext, complete_extension(catalog.BIASED, catalog.square_vertices()))

    def test_trivial_menu(self):
        ext = arbitrary_extension(catalog.BIASED, [[(1, catalog.BIASED)]])
        self.assertEqual(ext.scenario.parties, ((2, 2), (1,)))
        self.assertEqual(ext.probabilities, catalog.BIASED.probabilities)

    def test_conjugate_of_pr(self):
        ce = conjugate_extension(catalog.PR_EXTENSION)
        self.assertTrue(same_up_to_relabeling(ce, catalog.PR_EXTENSION, 1))

    def test_pad_then_merge(self):
        padded = pad_outputs(catalog.BIASED_EXTENSION, 1, 1, 3)
        self.assertEqual(merge_outputs(padded, 1, 1, [0, 1, 1]), catalog.BIASED_EXTENSION)


if __name__ == '__main__':
    unittest.main()
