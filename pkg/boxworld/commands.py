from __future__ import unicode_literals, absolute_import, print_function

import os
import sys
import time
import logging
from collections import OrderedDict
from functools import wraps
from fractions import Fraction

from . import json
from . import catalog
from .arith import format_rational
from .bell import chsh, cglmp3, maximize_over_relabelings, merge_outputs, pad_outputs
from .box import validate, is_nonsignaling, check_nonsignaling
from .ensembles import Ensemble, minimal_ensembles, express_as_minimal_mix, mixed_ensemble_channel
from .exceptions import BoxError, FormatError, ValidationError
from .extension import complete_extension_spec, conjugate_box, conjugate_extension, pad_to_rectangular, purification_census, ExtensionSpec
from .parser import (read_document, box_parser, vertex_set_parser, vertex_set_document, report_document,
                     extension_document, menu_parser, mixed_parser, ensemble_parser, integers_parser, rational_parser)
from .polytope import (DEFAULT_CAP, THREECYCLE, constraint_system, ns_dimension, is_vertex, deterministic_vertices, barrett_2222_vertices,
                       threecycle_vertices, threecycle_system, enumerate_vertices, isotropic_box, threecycle_box)
from .utils import format_time, jobs_count

BUILTIN_VERTICES = ('builtin:det', 'builtin:2222', 'builtin:3cycle', 'enumerate')

QUICK_ETAS = (Fraction(4, 5), Fraction(9, 10))
STABILITY_ETAS = (Fraction(7, 9), Fraction(4, 5), Fraction(5, 6), Fraction(9, 10), Fraction(19, 20))


def command(func=None, **kwargs):
    """
    Marks a method as a command verb. The docstring is its help text; a
    command returns a JSON document, or a ``(document, status)`` pair.

    """
    def _command(func):
        @wraps(func)
        def wrapped(self, *args):
            result = func(self, *args)
            if isinstance(result, tuple):
                return result
            return result, 0
        wrapped.command = func.__name__.replace('_', '-')
        for attr, value in kwargs.items():
            setattr(wrapped, attr, value)
        return wrapped
    if callable(func):
        return _command(func)
    return _command


class BoxCommands(object):
    def __init__(self, log=logging, vertices=None, max_support=None, prune_nonlocal=False, jobs=1,
                 cap=DEFAULT_CAP, eta=None, lam=None, party=None, input=None, map=None, size=None,
                 relabel=False, max_denominator=8, pad=False, quick=False, out=None, **options):
        self.log = log
        self.selector = vertices
        self.max_support = max_support
        self.prune_nonlocal = prune_nonlocal
        self.jobs = jobs_count(jobs)
        self.cap = cap
        self.eta = eta
        self.lam = lam
        self.party = party
        self.input = input
        self.map = map
        self.size = size
        self.relabel = relabel
        self.max_denominator = max_denominator
        self.rectangular = pad
        self.quick = quick
        self.out = out or sys.stdout

    def lookup(self, verb):
        try:
            func = getattr(self, verb.strip().lower().replace('-', '_'))
            if not func.command:
                raise AttributeError
        except AttributeError:
            raise FormatError("Unknown command: %s" % verb)
        return func

    def execute(self, verb, *args):
        func = self.lookup(verb)
        start = time.time()
        document, status = func(*args)
        self.out.write(json.dumps(document))
        self.out.write("\n")
        self.log.debug("Executed %s in %s", func.command, format_time(time.time() - start))
        return status

    def _box(self, args, position=0):
        if len(args) <= position:
            raise FormatError("Missing box file argument")
        return box_parser(read_document(args[position]))

    def _vertex_set(self, box, selector=None):
        selector = selector or self.selector or 'enumerate'
        if selector == 'builtin:det':
            return deterministic_vertices(box.scenario)
        if selector == 'builtin:2222':
            return barrett_2222_vertices()
        if selector == 'builtin:3cycle':
            return threecycle_vertices()
        if selector == 'enumerate':
            return enumerate_vertices(box.scenario, cap=self.cap, log=self.log)
        system = threecycle_system() if box.scenario == THREECYCLE else None
        return vertex_set_parser(read_document(selector), system)

    def _party(self, box, default=None):
        party = default if self.party is None else int(self.party)
        if party is None:
            raise FormatError("Missing --party option")
        if not 0 <= party < box.scenario.n:
            raise ValidationError("Invalid party %r" % (party,))
        return party

    @command
    def validate(self, *args):
        """
        Checks ranges and normalization of a box.

        Usage: validate FILE

        """
        if not args:
            raise FormatError("Missing box file argument")
        violations = validate(box_parser(read_document(args[0]), check=False))
        return OrderedDict([('valid', not violations), ('violations', violations)]), 1 if violations else 0

    @command
    def ns_check(self, *args):
        """
        Checks that no party can signal to the others.

        Usage: ns-check FILE

        """
        box = self._box(args)
        result = is_nonsignaling(box)
        return OrderedDict([('nonsignaling', result)]), 0 if result else 1

    @command
    def vertex_check(self, *args):
        """
        Rank test of extremality; prints the tight rank.

        Usage: vertex-check FILE [--vertices builtin:3cycle]

        """
        box = self._box(args)
        system = threecycle_system() if self.selector == 'builtin:3cycle' else None
        vertex, tight, t = is_vertex(box, system)
        return OrderedDict([('is_vertex', vertex), ('tight_rank', "%d" % tight), ('t', "%d" % t)])

    @command
    def dim(self, *args):
        """
        Dimension counts of the box's scenario.

        Usage: dim FILE

        """
        box = self._box(args)
        system = constraint_system(box.scenario)
        return OrderedDict([
            ('t', system.t),
            ('rank', system.rank),
            ('effective_dimension', system.effective_dimension),
            ('ns_dimension', ns_dimension(box.scenario)),
        ])

    @command
    def vertices(self, *args):
        """
        Lists a vertex set: builtin:2222, builtin:3cycle, or builtin:det and
        enumerate over the scenario of FILE.

        Usage: vertices SELECTOR [FILE]

        """
        if not args:
            raise FormatError("Missing vertex selector")
        selector = args[0]
        if selector in ('builtin:det', 'enumerate'):
            box = self._box(args, 1)
        elif selector in BUILTIN_VERTICES:
            box = None
        else:
            raise FormatError("Unknown vertex selector %r" % selector)
        return vertex_set_document(self._vertex_set(box, selector))

    @command
    def min_ensembles(self, *args):
        """
        Enumerates every minimal ensemble of a box.

        Usage: min-ensembles FILE [--vertices SELECTOR] [--max-support N] [--prune-nonlocal] [--jobs N]

        """
        box = self._box(args)
        vs = self._vertex_set(box)
        report = minimal_ensembles(box, vs, max_support=self.max_support, prune_nonlocal=self.prune_nonlocal, jobs=self.jobs, log=self.log)
        return report_document(report)

    def _extension(self, spec):
        box = spec.build()
        if self.rectangular:
            self.log.warning("Padded extensions are not suitable for vertex tests")
            box = pad_to_rectangular(box, box.scenario.n - 1)
        return extension_document(spec, box)

    @command
    def complete_extension(self, *args):
        """
        Builds the complete extension of a box.

        Usage: complete-extension FILE [--vertices SELECTOR] [--pad]

        """
        box = self._box(args)
        vs = self._vertex_set(box)
        spec = complete_extension_spec(box, vs, max_support=self.max_support, prune_nonlocal=self.prune_nonlocal, jobs=self.jobs, log=self.log)
        return self._extension(spec)

    @command
    def arbitrary_extension(self, *args):
        """
        Builds the extension steering a box into each ensemble of a menu.

        Usage: arbitrary-extension FILE MENU_FILE

        """
        box = self._box(args)
        if len(args) < 2:
            raise FormatError("Missing menu file argument")
        check_nonsignaling(box)
        menu = menu_parser(read_document(args[1]), box.scenario)
        return self._extension(ExtensionSpec(box, menu))

    @command
    def conjugate(self, *args):
        """
        Complete extension of the conjugate box of an extension.

        Usage: conjugate FILE [--party N]

        """
        box = self._box(args)
        party = self._party(box, box.scenario.n - 1)
        marginal = conjugate_box(box, party)
        ce = conjugate_extension(box, party, cap=self.cap, jobs=self.jobs, log=self.log)
        document = OrderedDict([('conjugate_box', json.box_document(marginal))])
        document['extension'] = json.box_document(ce)
        return document

    @command
    def channel(self, *args):
        """
        Post-processing channel of a mixed ensemble.

        Usage: channel FILE MIXED_FILE [--vertices SELECTOR]

        """
        box = self._box(args)
        if len(args) < 2:
            raise FormatError("Missing mixed ensemble file argument")
        mixed, decompositions = mixed_parser(read_document(args[1]))
        vs = self._vertex_set(box)
        r, channel = mixed_ensemble_channel(mixed, decompositions, vertex_set=vs, target=box)
        return OrderedDict([
            ('vertex_set', list(vs.labels)),
            ('r', [format_rational(v) for v in r]),
            ('channel', [[None if v is None else format_rational(v) for v in row] for row in channel.rows]),
        ])

    @command
    def mix(self, *args):
        """
        Expresses a pure members ensemble as a mixture of minimal ensembles.

        Usage: mix FILE ENSEMBLE_FILE [--vertices SELECTOR]

        """
        box = self._box(args)
        if len(args) < 2:
            raise FormatError("Missing ensemble file argument")
        vs = self._vertex_set(box)
        ensemble = Ensemble(vs, ensemble_parser(read_document(args[1])))
        report = minimal_ensembles(box, vs, jobs=self.jobs, log=self.log)
        q = express_as_minimal_mix(ensemble, report)
        document = report_document(report)
        document['q'] = [format_rational(v) for v in q]
        return document

    def _bell(self, box, report):
        return OrderedDict([
            ('functional', report.functional),
            ('value', format_rational(report.value)),
            ('variant', report.variant),
            ('classical_bound', format_rational(report.classical_bound)),
        ])

    @command
    def chsh(self, *args):
        """
        CHSH value, maximized over sign variants (and relabelings with --relabel).

        Usage: chsh FILE [--relabel]

        """
        box = self._box(args)
        report = maximize_over_relabelings(box, 'chsh') if self.relabel else chsh(box)
        return self._bell(box, report)

    @command
    def cglmp3(self, *args):
        """
        Three-outcome CGLMP value, maximized over output (and input with --relabel) relabelings.

        Usage: cglmp3 FILE [--relabel]

        """
        box = self._box(args)
        report = maximize_over_relabelings(box, 'cglmp3') if self.relabel else cglmp3(box)
        return self._bell(box, report)

    @command
    def merge(self, *args):
        """
        Merges outcomes of some inputs of a party.

        Usage: merge FILE --party N --input Z[,Z...] --map 0,1,1

        """
        box = self._box(args)
        party = self._party(box)
        inputs = integers_parser(self.input, "input")
        mapping = integers_parser(self.map, "map")
        if not inputs or not mapping:
            raise FormatError("merge needs --input and --map")
        return json.box_document(merge_outputs(box, party, inputs, mapping))

    @command
    def pad(self, *args):
        """
        Appends zero-probability outcomes to inputs of a party.

        Usage: pad FILE --party N --input Z[,Z...] --size D

        """
        box = self._box(args)
        party = self._party(box)
        inputs = integers_parser(self.input, "input")
        if not inputs or self.size is None:
            raise FormatError("pad needs --input and --size")
        for z in inputs:
            box = pad_outputs(box, party, z, int(self.size))
        return json.box_document(box)

    @command
    def isotropic(self, *args):
        """
        Emits eta B_000 + (1 - eta) B_001.

        Usage: isotropic --eta n/d

        """
        eta = rational_parser(self.eta, "eta")
        if eta is None:
            raise FormatError("isotropic needs --eta")
        if not 0 <= eta <= 1:
            raise ValidationError("eta must lie in [0, 1]")
        if eta < Fraction(1, 2):
            self.log.warning("eta = %s is below 1/2, off the usual isotropic segment", format_rational(eta))
        return json.box_document(isotropic_box(eta))

    @command
    def isotropic_stability(self, *args):
        """
        Checks that the minimal ensembles of the isotropic box keep the same
        supports across eta in (3/4, 1); --quick tries two values.

        Usage: isotropic-stability [--quick] [--jobs N]

        """
        etas = QUICK_ETAS if self.quick else STABILITY_ETAS
        vs = barrett_2222_vertices()
        counts = OrderedDict()
        reference = None
        stable = True
        for eta in etas:
            report = minimal_ensembles(isotropic_box(eta), vs, prune_nonlocal=True, jobs=self.jobs, log=self.log)
            supports = set(report.supports)
            counts[format_rational(eta)] = len(supports)
            if reference is None:
                reference = supports
            elif supports != reference:
                self.log.warning("Supports at eta = %s differ from eta = %s", format_rational(eta), format_rational(etas[0]))
                stable = False
        return OrderedDict([('stable', stable), ('counts', counts)]), 0 if stable else 2

    @command
    def threecycle(self, *args):
        """
        Emits the 3-cycle box (1 - lambda) C_0 + lambda times the uniform box.

        Usage: threecycle --lambda n/d

        """
        lam = rational_parser(self.lam, "lambda")
        if lam is None:
            raise FormatError("threecycle needs --lambda")
        if not 0 <= lam <= 1:
            raise ValidationError("lambda must lie in [0, 1]")
        if not 0 < lam < Fraction(2, 3):
            self.log.warning("lambda = %s is outside the contextual regime (0, 2/3)", format_rational(lam))
        return json.box_document(threecycle_box(lam))

    @command
    def census(self, *args):
        """
        Boxes of one party with two binary inputs whose complete extension is a vertex.

        Usage: census [--max-denominator D]

        """
        vs = deterministic_vertices(catalog.MAXIMALLY_MIXED.scenario)
        boxes = purification_census(vs.scenario, vs, max_denominator=int(self.max_denominator), log=self.log)
        return OrderedDict([('count', len(boxes)), ('boxes', [json.box_document(b) for b in boxes])])

    @command
    def fixtures(self, *args):
        """
        Writes every reference table as a JSON file.

        Usage: fixtures DIR

        """
        if not args:
            raise FormatError("Missing directory argument")
        directory = args[0]
        if not os.path.isdir(directory):
            os.makedirs(directory)
        written = []
        for name, box in catalog.fixtures().items():
            path = os.path.join(directory, '%s.json' % name)
            with open(path, 'w') as fp:
                json.dump(box, fp)
                fp.write("\n")
            written.append(path)
        path = os.path.join(directory, 'isotropic_supports.json')
        with open(path, 'w') as fp:
            json.dump([list(s) for s in catalog.isotropic_supports()], fp)
            fp.write("\n")
        written.append(path)
        return OrderedDict([('written', written)])

    def _help(self, func, cmd):
        # Figure out indentation for docstring:
        doc = func.__doc__ or "No docs for %s." % cmd
        doc = doc.strip('\n').split('\n')
        indent = 0
        for l in doc:
            indent = len(l) - len(l.lstrip())
            if indent:
                break
        return '\n'.join(l[indent:].rstrip() for l in doc).strip('\n').split('\n')

    def commands(self):
        found = []
        for name in sorted(dir(self)):
            func = getattr(self, name, None)
            verb = getattr(func, 'command', None)
            if verb:
                found.append((verb, func))
        return found

    @command
    def help(self, *args):
        """
        Returns help for any and all available commands.

        Usage: help [command]

        """
        if args:
            func = self.lookup(args[0])
            return OrderedDict([(func.command, self._help(func, func.command))])
        return OrderedDict((verb, self._help(func, verb)[0]) for verb, func in self.commands())


def run_command(verb, args, log=logging, **options):
    """Runs one verb; returns the exit status."""
    try:
        return BoxCommands(log=log, **options).execute(verb, *args)
    except BoxError as e:
        if options.get('traceback'):
            raise
        sys.stderr.write("ERR: [%d] %s\n" % (e.status, e))
        return e.status
