from __future__ import unicode_literals, absolute_import

import unittest
from fractions import Fraction as F

from boxworld import catalog, json
from boxworld.arith import format_rational
from boxworld.exceptions import FormatError, ValidationError
from boxworld.polytope import threecycle_system, threecycle_vertices
from boxworld.parser import (box_parser, vertex_set_parser, vertex_set_document, menu_parser, mixed_parser, ensemble_parser,
                             integers_parser, rational_parser)


class TestJSON(unittest.TestCase):

    def test_rationals_are_strings(self):
        self.assertEqual(json.dumps(F(1, 2)), '"1/2"')
        self.assertEqual(json.dumps([F(3)]), '[\n  "3"\n]')

    def test_box_document(self):
        document = json.loads(json.dumps(catalog.BIASED))
        self.assertEqual(document['parties'], [{'inputs': [2, 2]}])
        self.assertEqual(document['probabilities'], ["1/3", "2/3", "2/3", "1/3"])


class TestBoxParser(unittest.TestCase):

    def test_parse(self):
        text = '{"parties": [{"inputs": [2, 2]}], "probabilities": ["1/3", "2/3", "2/3", "1/3"]}'
        self.assertEqual(box_parser(text), catalog.BIASED)

    def test_extension_document(self):
        self.assertEqual(box_parser(json.dumps(catalog.CONJUGATE_EXTENSION)), catalog.CONJUGATE_EXTENSION)

    def test_invalid_json(self):
        with self.assertRaises(FormatError):
            box_parser('{"parties": ')
        with self.assertRaises(FormatError):
            box_parser('[1, 2]')

    def test_missing_keys(self):
        with self.assertRaises(FormatError):
            box_parser('{"parties": [{"inputs": [2]}]}')

    def test_bad_scenario(self):
        with self.assertRaises(FormatError):
            box_parser('{"parties": [{"inputs": [2, 0]}], "probabilities": []}')
        with self.assertRaises(FormatError):
            box_parser('{"parties": [{"inputs": ["2"]}], "probabilities": ["1", "0"]}')

    def test_wrong_count(self):
        with self.assertRaises(FormatError):
            box_parser('{"parties": [{"inputs": [2]}], "probabilities": ["1"]}')

    def test_decimal(self):
        with self.assertRaises(FormatError):
            box_parser('{"parties": [{"inputs": [2]}], "probabilities": ["0.5", "1/2"]}')

    def test_invalid_box(self):
        text = '{"parties": [{"inputs": [2]}], "probabilities": ["1/2", "1/3"]}'
        with self.assertRaises(ValidationError):
            box_parser(text)
        self.assertEqual(box_parser(text, check=False).probabilities, (F(1, 2), F(1, 3)))


class TestDocuments(unittest.TestCase):

    def test_vertex_set(self):
        square = catalog.square_vertices()
        vs = vertex_set_parser(json.dumps(vertex_set_document(square)))
        self.assertEqual(vs.labels, square.labels)
        self.assertEqual(vs.vertices, square.vertices)

    def test_unlabeled_vertices(self):
        document = vertex_set_document(catalog.square_vertices())
        for vertex in document['vertices']:
            del vertex['label']
        self.assertEqual(vertex_set_parser(document).labels, ["V_0", "V_1", "V_2", "V_3"])

    def test_non_vertex_rejected(self):
        document = vertex_set_document(catalog.square_vertices())
        document['vertices'].append({'label': "M", 'probabilities': ["1/2", "1/2", "1/2", "1/2"]})
        with self.assertRaises(ValidationError):
            vertex_set_parser(document)

    def test_threecycle_vertex_set(self):
        document = vertex_set_document(threecycle_vertices())
        with self.assertRaises(ValidationError):
            vertex_set_parser(document)
        vs = vertex_set_parser(document, threecycle_system())
        self.assertEqual(len(vs), 12)

    def test_menu(self):
        square = catalog.square_vertices()
        document = {'menu': [[
            {'weight': "1/3", 'probabilities': ["1", "0", "0", "1"]},
            {'weight': "2/3", 'probabilities': ["0", "1", "1", "0"]},
        ]]}
        menu = menu_parser(document, catalog.BIASED.scenario)
        self.assertEqual(menu, [[(F(1, 3), square[2]), (F(2, 3), square[3])]])
        with self.assertRaises(FormatError):
            menu_parser({'menu': []}, catalog.BIASED.scenario)

    def test_mixed(self):
        parties = json.scenario_document(catalog.BIASED.scenario)
        document = {'parties': parties, 'members': [
            {'weight': format_rational(w), 'probabilities': json.box_document(b)['probabilities'],
             'decomposition': [format_rational(q) for q in qs]}
            for w, b, qs in catalog.MIXED_EXAMPLE
        ]}
        mixed, decompositions = mixed_parser(json.dumps(document))
        self.assertEqual(mixed, [(w, b) for w, b, _ in catalog.MIXED_EXAMPLE])
        self.assertEqual(decompositions, [list(qs) for _, _, qs in catalog.MIXED_EXAMPLE])
        with self.assertRaises(FormatError):
            mixed_parser({'members': [{'weight': "1"}]})

    def test_ensemble(self):
        self.assertEqual(ensemble_parser('{"weights": ["1/2", "1/2"]}'), [F(1, 2), F(1, 2)])
        with self.assertRaises(FormatError):
            ensemble_parser('{"weights": "1/2"}')


class TestOptionValues(unittest.TestCase):

    def test_integers(self):
        self.assertEqual(integers_parser("0, 1,1"), [0, 1, 1])
        self.assertEqual(integers_parser("2 0"), [2, 0])
        self.assertIsNone(integers_parser(None))
        with self.assertRaises(FormatError):
            integers_parser("0,a")

    def test_rational(self):
        self.assertEqual(rational_parser("4/5"), F(4, 5))
        with self.assertRaises(FormatError):
            rational_parser("0.8", "eta")


if __name__ == '__main__':
    unittest.main()
