from __future__ import unicode_literals, absolute_import

import unittest
from fractions import Fraction as F

from boxworld import catalog
from boxworld.bell import (CLASSICAL_BOUND, CGLMP3_SCENARIO, correlator, chsh_expression, chsh, cglmp3_expression,
                           cglmp3, maximize_over_relabelings, merge_outputs, pad_outputs)
from boxworld.box import Box, relabel
from boxworld.exceptions import ScenarioMismatch, ValidationError
from boxworld.polytope import deterministic_vertices, nonlocal_box, isotropic_box


def cglmp3_box():
    """Second outcome equals the first, shifted by one on inputs (1, 0)."""
    return Box.from_function(CGLMP3_SCENARIO, lambda a, x: F(1, 3) if a[1] == (a[0] + (x == (1, 0))) % 3 else 0)


class TestCHSH(unittest.TestCase):

    def test_nonlocal_boxes(self):
        for r in range(2):
            for s in range(2):
                for t in range(2):
                    self.assertEqual(chsh_expression(nonlocal_box(r, s, t), (r, s, t)), 4)

    def test_pr_box(self):
        report = chsh(nonlocal_box(0, 0, 0))
        self.assertEqual(report.value, 4)
        self.assertEqual(report.variant, (0, 0, 0))
        self.assertEqual(report.classical_bound, CLASSICAL_BOUND)

    def test_isotropic_line(self):
        for eta in (F(1, 2), F(3, 4), F(4, 5), F(1)):
            self.assertEqual(chsh(isotropic_box(eta)).value, 8 * eta - 4)

    def test_correlator(self):
        self.assertEqual(correlator(nonlocal_box(0, 0, 0), 1, 1), -1)
        self.assertEqual(correlator(isotropic_box(F(3, 4)), 0, 0), F(1, 2))

    def test_local_bound(self):
        values = [chsh(v).value for v in deterministic_vertices(((2, 2), (2, 2)))]
        self.assertEqual(max(values), 2)

    def test_merged_extension(self):
        self.assertEqual(chsh(catalog.MERGED_EXTENSION).value, F(10, 3))

    def test_relabelings(self):
        report = maximize_over_relabelings(nonlocal_box(1, 1, 1), 'chsh')
        self.assertEqual(report.value, 4)

    def test_scenario(self):
        with self.assertRaises(ScenarioMismatch):
            chsh(catalog.BIASED_EXTENSION)


class TestCGLMP(unittest.TestCase):

    def test_nonlocal_box(self):
        self.assertEqual(cglmp3_expression(cglmp3_box()), 4)

    def test_local_bound(self):
        values = [cglmp3_expression(v) for v in deterministic_vertices(CGLMP3_SCENARIO)]
        self.assertEqual(len(values), 81)
        self.assertEqual(max(values), 2)

    def test_uniform(self):
        uniform = Box(CGLMP3_SCENARIO, [F(1, 9)] * CGLMP3_SCENARIO.t)
        self.assertEqual(cglmp3_expression(uniform), 0)

    def test_output_relabelings(self):
        relabeled = relabel(cglmp3_box(), {0: (None, [[1, 2, 0], [0, 1, 2]])})
        self.assertLess(cglmp3_expression(relabeled), 4)
        self.assertEqual(cglmp3(relabeled).value, 4)

    def test_unknown_functional(self):
        with self.assertRaises(ValidationError):
            maximize_over_relabelings(cglmp3_box(), 'cglmp4')

    def test_scenario(self):
        with self.assertRaises(ScenarioMismatch):
            cglmp3(nonlocal_box(0, 0, 0))


class TestReshaping(unittest.TestCase):

    def test_merge_map_must_be_onto(self):
        with self.assertRaises(ValidationError):
            merge_outputs(catalog.BIASED_EXTENSION, 1, 0, [0, 2, 2])
        with self.assertRaises(ValidationError):
            merge_outputs(catalog.BIASED_EXTENSION, 1, 0, [0, 1])

    def test_merge_several_inputs(self):
        merged = merge_outputs(catalog.BIASED_EXTENSION, 1, [0, 1], {0: [0, 0, 0], 1: [0, 0]})
        self.assertEqual(merged.scenario.parties, ((2, 2), (1, 1)))
        self.assertEqual(merged.probabilities[:2], (F(1, 3), F(2, 3)))

    def test_pad(self):
        padded = pad_outputs(catalog.BIASED, 0, 1, 4)
        self.assertEqual(padded.scenario.parties, ((2, 4),))
        self.assertEqual(padded.probabilities, catalog.BIASED.probabilities + (0, 0))
        with self.assertRaises(ValidationError):
            pad_outputs(catalog.BIASED, 0, 1, 1)
        with self.assertRaises(ValidationError):
            pad_outputs(catalog.BIASED, 1, 0, 3)


class TestRelabelingSearch(unittest.TestCase):

    def test_padded_extension(self):
        self.assertEqual(cglmp3(catalog.PADDED_EXTENSION).value, 3)

    def test_padded_extension_before_relabeling(self):
        b = catalog.BIASED_EXTENSION
        for party, z in ((0, 0), (0, 1), (1, 1)):
            b = pad_outputs(b, party, z, 3)
        report = maximize_over_relabelings(b, 'cglmp3')
        self.assertEqual(report.value, 3)
        self.assertEqual(cglmp3_expression(relabel(b, report.variant)), 3)

    def test_deterministic_orbit(self):
        vs = deterministic_vertices(((2, 2), (2, 2)))
        self.assertEqual(maximize_over_relabelings(vs[5], 'chsh').value, 2)

    def test_merge_identity(self):
        self.assertEqual(merge_outputs(catalog.BIASED_EXTENSION, 1, 0, [0, 1, 2]), catalog.BIASED_EXTENSION)

    def test_merge_everything(self):
        merged = merge_outputs(catalog.BIASED, 0, [0, 1], {0: [0, 0], 1: [0, 0]})
        self.assertEqual(merged.probabilities, (1, 1))


if __name__ == '__main__':
    unittest.main()
