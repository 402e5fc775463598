#!/usr/bin/env python
"""

Exact computations on non-signaling boxes.

"""
from __future__ import absolute_import, unicode_literals

import os
import sys

sys.path.append(os.path.join(os.path.dirname(os.path.realpath(__file__)), '..', '..'))

from optparse import make_option, OptionParser

from boxworld import version
from boxworld.commands import run_command
from boxworld.logging import setup_logging
from boxworld.polytope import DEFAULT_CAP

help = "Runs a box command and prints its result as JSON; try 'help' for the list of commands"
args = 'COMMAND [ARGS...]'

base_option_list = (
    make_option('-v', '--verbosity', action='store', dest='verbosity', default='1',
        type='choice', choices=['0', '1', '2', '3', 'v'],
        help="Verbosity level; 0=minimal output, 1=normal output, 2=verbose output, 3=very verbose output"),
    make_option('--traceback', action='store_true',
        help="Print traceback on exception"),
)

option_list = (
    make_option("--logfile", action='store', dest='logfile', default=None),
    make_option("-j", "--jobs", action='store', dest='jobs', default=os.environ.get('BOXWORLD_JOBS', '1'),
        help="Worker processes for the ensemble search; 0 uses every CPU (default: $BOXWORLD_JOBS or 1)"),
    make_option("--vertices", action='store', dest='vertices', default=None,
        help="Vertex set: builtin:det, builtin:2222, builtin:3cycle, enumerate (default) or a JSON file"),
    make_option("--max-support", action='store', dest='max_support', default=None, type='int'),
    make_option("--prune-nonlocal", action='store_true', dest='prune_nonlocal', default=False,
        help="Only explore supports holding a non-deterministic vertex when the box is non-local"),
    make_option("--cap", action='store', dest='cap', default=DEFAULT_CAP, type='int',
        help="Largest effective dimension for vertex enumeration (default: %d)" % DEFAULT_CAP),
    make_option("--eta", action='store', dest='eta', default=None),
    make_option("--lambda", action='store', dest='lam', default=None),
    make_option("--party", action='store', dest='party', default=None, type='int'),
    make_option("--input", action='store', dest='input', default=None),
    make_option("--map", action='store', dest='map', default=None),
    make_option("--size", action='store', dest='size', default=None, type='int'),
    make_option("--relabel", action='store_true', dest='relabel', default=False,
        help="Maximize Bell values over input and output relabelings"),
    make_option("--max-denominator", action='store', dest='max_denominator', default=8, type='int'),
    make_option("--pad", action='store_true', dest='pad', default=False,
        help="Pad the extending party's outputs to a rectangular table"),
    make_option("--quick", action='store_true', dest='quick', default=False,
        help="Stability checks on two values only"),
)


def run(*argv, **options):
    if not argv:
        argv = ('help',)
    verbosity = options.pop('verbosity', '1')
    logfile = options.pop('logfile', None)
    log = setup_logging(verbosity, logfile)
    sys.exit(run_command(argv[0], argv[1:], log=log, **options))


def main():
    usage = 'usage: %%prog [options] %s' % args
    if help:
        usage = '%s\n\n%s' % (usage, help)
    parser = OptionParser(usage,
                          version=version,
                          option_list=base_option_list + option_list)

    options, argv = parser.parse_args(sys.argv[1:])

    run(*argv, **options.__dict__)

if __name__ == '__main__':
    main()
