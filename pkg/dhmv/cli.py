# -*- coding: utf-8 -*-

"""
dhmv.cli
~~~~~~~~

``dhmv`` command line.  Exit codes: 0 success, 1 the checked set is not
a mutual-visibility set, 2 bad input, 3 not distance-hereditary,
4 oracle cap exceeded.

"""

import argparse
import io
import logging
import sys
import time

import dhmv
from dhmv import formats, util
from dhmv.algorithm import algorithm_a, mu_components
from dhmv.datatypes import ExpansionSpec, SHAPE_NAME, VertexSet
from dhmv.decomposition import canonical_decomposition
from dhmv.directed import orient, t_arrows
from dhmv.error import (
    Error, CapExceededError, DisconnectedError, NotDistanceHereditaryError,
)
from dhmv.generators import family, random_dh
from dhmv.graph import components, first_invisible_pair, induced_subgraph
from dhmv.oracle import mu_bruteforce, recognize_dh


logger = logging.getLogger(__file__)

(EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_NOT_DH, EXIT_CAP) = range(5)


def read_graph(path):
    if path == '-':
        return formats.create('edgelist').load(sys.stdin)
    with io.open(path, encoding='utf-8') as f:
        return formats.create('edgelist').load(f)


def _largest_component(g):
    parts = components(g)
    if not parts:
        raise DisconnectedError('empty graph')
    if len(parts) > 1:
        logger.warning('graph has %d components; using the largest', len(parts))
    best = max(parts, key=lambda c: (len(c), -c[0]))
    return induced_subgraph(g, best)


def _decompose_timed(g):
    timings = {}
    started = time.perf_counter()
    seq = recognize_dh(g)
    if not seq.accepted:
        raise NotDistanceHereditaryError(seq.remainder, seq.vertices)
    d = canonical_decomposition(g, seq)
    timings['decompose_ms'] = (time.perf_counter() - started) * 1000
    started = time.perf_counter()
    dd = orient(d)
    timings['orient_ms'] = (time.perf_counter() - started) * 1000
    started = time.perf_counter()
    report = t_arrows(dd)
    timings['t_arrows_ms'] = (time.perf_counter() - started) * 1000
    started = time.perf_counter()
    result = algorithm_a(dd, report)
    timings['algorithm_ms'] = (time.perf_counter() - started) * 1000
    return result, timings


def cmd_mu(args):
    g = read_graph(args.input)
    if g.n == 0:
        raise DisconnectedError('empty graph')
    parts = components(g)
    connected = len(parts) <= 1
    if not connected:
        logger.warning('graph has %d components; reporting the largest mu', len(parts))
    timings = None
    if connected and g.n > 2:
        result, timings = _decompose_timed(g)
    else:
        result, _ = mu_components(g)
    if args.json:
        if args.timings and timings is not None:
            timings = dict((k, timings[k]) for k in ('decompose_ms', 'orient_ms', 'algorithm_ms'))
        else:
            timings = None
        fmt = formats.create('json')
        sys.stdout.write(fmt.dumps(fmt.document(g, result, connected=connected, timings=timings)))
    elif args.set_only:
        print(' '.join(str(v) for v in result.set))
    else:
        print('mu: %d' % result.mu)
        print('set: %s' % ' '.join(str(v) for v in result.set))
        print('shape: %s' % SHAPE_NAME[result.shape])
    return EXIT_OK


def cmd_decompose(args):
    g, mapping = _largest_component(read_graph(args.input))
    seq = recognize_dh(g)
    if not seq.accepted:
        raise NotDistanceHereditaryError(seq.remainder, seq.vertices)
    dd = orient(canonical_decomposition(g, seq))
    sys.stdout.write(formats.create('dot').dumps(dd, tree=args.tree, labels=mapping))
    return EXIT_OK


def cmd_check(args):
    g = read_graph(args.input)
    members = VertexSet(args.vertices)
    failing = first_invisible_pair(g, members, across_components=True)
    if failing is None:
        print('mutual-visibility set')
        return EXIT_OK
    print('not visible: %d %d' % failing)
    return EXIT_FAIL


def cmd_oracle(args):
    g = read_graph(args.input)
    cap = args.cap if args.cap is not None else util.oracle_cap()
    if g.n > cap:
        raise CapExceededError(g.n, cap)
    best = (0, VertexSet())
    parts = components(g)
    if len(parts) > 1:
        logger.warning('graph has %d components; reporting the largest mu', len(parts))
    for part in parts:
        sub, mapping = induced_subgraph(g, part)
        size, witness = mu_bruteforce(sub, n_cap=cap, jobs=args.jobs)
        if size > best[0]:
            best = (size, VertexSet(mapping[v] for v in witness))
    print('mu: %d' % best[0])
    print('set: %s' % ' '.join(str(v) for v in best[1]))
    return EXIT_OK


def _weights(text):
    try:
        values = tuple(float(w) for w in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('weights must be three comma-separated numbers')
    if len(values) != 3:
        raise argparse.ArgumentTypeError('weights must be three comma-separated numbers')
    return values


def cmd_gen(args):
    if args.family == 'random':
        if args.n is None:
            raise Error('gen random needs --n')
        g = random_dh(ExpansionSpec(args.seed, args.n, args.weights))
    else:
        g = family(args.family, *args.params)
    sys.stdout.write(formats.create('edgelist').dumps(g))
    return EXIT_OK


def cmd_bench(args):
    header = ('n', 'm', 'decompose_ms', 'orient_ms', 't_arrows_ms', 'algorithm_ms',
              'total_ms', 'us_per_item', 'ratio')
    print('%8s %9s %12s %10s %11s %12s %10s %11s %6s' % header)
    previous = None
    for n in args.sizes:
        spec = ExpansionSpec(args.seed, n, args.weights)
        g = random_dh(spec)
        runs = []
        for _ in range(max(1, args.repeat)):
            if g.n > 2:
                _, timings = _decompose_timed(g)
            else:
                timings = dict.fromkeys(('decompose_ms', 'orient_ms', 't_arrows_ms', 'algorithm_ms'), 0.0)
            runs.append(timings)
        stages = dict((k, util.median([r[k] for r in runs])) for k in runs[0])
        total = sum(stages.values())
        per_item = total * 1000 / max(1, g.n + g.m)
        ratio = '%6.2f' % (total / previous) if previous else '%6s' % '-'
        print('%8d %9d %12.2f %10.2f %11.2f %12.2f %10.2f %11.3f %s' % (
            g.n, g.m, stages['decompose_ms'], stages['orient_ms'], stages['t_arrows_ms'],
            stages['algorithm_ms'], total, per_item, ratio))
        previous = total or None
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog='dhmv', description='mutual-visibility in distance-hereditary graphs')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    parser.add_argument('--version', action='version', version='%(prog)s ' + dhmv.version)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('mu', help='maximum mutual-visibility set')
    p.add_argument('input')
    p.add_argument('--json', action='store_true')
    p.add_argument('--set-only', action='store_true')
    p.add_argument('--timings', action='store_true')
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser('decompose', help='canonical split decomposition as DOT')
    p.add_argument('input')
    p.add_argument('--dot', action='store_true', help='DOT output (the default)')
    p.add_argument('--tree', action='store_true', help='one node per bag')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser('check', help='test a vertex set for mutual visibility')
    p.add_argument('input')
    p.add_argument('vertices', nargs='*', type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('oracle', help='brute-force mu on any small graph')
    p.add_argument('input')
    p.add_argument('--cap', type=int, default=None)
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser('gen', help='emit a distance-hereditary graph as an edge list')
    p.add_argument('family')
    p.add_argument('params', nargs='*')
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--weights', type=_weights, default=util.DEFAULT_WEIGHTS)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('bench', help='time the pipeline on random graphs')
    p.add_argument('sizes', nargs='*', type=int)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--repeat', type=int, default=1)
    p.add_argument('--weights', type=_weights, default=util.BENCH_WEIGHTS)
    p.set_defaults(func=cmd_bench)
    return parser


def _configure_logging(verbose):
    if verbose >= 2:
        level = 'DEBUG'
    elif verbose == 1:
        level = 'INFO'
    else:
        level = util.log_level()
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except NotDistanceHereditaryError as e:
        sys.stderr.write('dhmv: %s\n' % e)
        return EXIT_NOT_DH
    except CapExceededError as e:
        sys.stderr.write('dhmv: oracle cap exceeded: %s\n' % e)
        return EXIT_CAP
    except (Error, IOError) as e:
        sys.stderr.write('dhmv: error: %s\n' % e)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
