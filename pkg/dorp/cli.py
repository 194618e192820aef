# -*- coding: utf-8 -*-
# Copyright: See the LICENSE file.


"""The dorp-workbench command line."""

import argparse
import logging
import sys

from . import __version__
from . import closure
from . import config
from . import counting
from . import enumeration
from . import enums
from . import errors
from . import generators
from . import greens
from . import helpers
from . import maps
from . import oeis
from . import rank
from . import suites
from . import utils

logger = logging.getLogger('dorp.cli')


def _chain_sizes(text):
    """`4` or an inclusive range `1..8`."""
    try:
        if '..' in text:
            low, high = text.split('..', 1)
            sizes = list(range(int(low), int(high) + 1))
        else:
            sizes = [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or a range like 1..8, got %r" % text)
    if not sizes:
        raise argparse.ArgumentTypeError("empty range %r" % text)
    return sizes


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--bound', type=int, dest='oracle_bound', help="largest n for brute-force oracles")
    common.add_argument('--jobs', type=int, help="worker processes for pair scans")
    common.add_argument('--seed', type=int, help="seed for sampling suites (default %d)" % config.DEFAULT_SEED)
    common.add_argument('--cache-dir', dest='cache_dir', help="OEIS cache directory")
    common.add_argument('--offline', action='store_const', const=True, help="never touch the network")
    common.add_argument('-v', '--verbose', action='store_true', help="log progress to stderr")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='dorp-workbench', description=__doc__)
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    count = commands.add_parser('count', parents=[common], help="closed-form count tables")
    count.add_argument('--n', type=_chain_sizes, required=True)
    count.add_argument('--table', choices=sorted(counting.TABLES), default='order')
    count.add_argument('--p', type=int)
    count.add_argument('--r', type=int)
    count.add_argument('--format', choices=['csv', 'json'], default='csv')

    enumerate_ = commands.add_parser('enumerate', parents=[common], help="stream element literals")
    enumerate_.add_argument('--n', type=int, required=True)
    enumerate_.add_argument('--object', choices=['dorp', 'ls', 'drp', 'ideal', 'jstar', 'all'], default='dorp')
    enumerate_.add_argument('--p', type=int)
    enumerate_.add_argument('--format', choices=['literal', 'json'], default='literal')

    green = commands.add_parser('greens', parents=[common], help="egg-box classes as JSON")
    green.add_argument('--n', type=int, required=True)
    green.add_argument('--object', choices=['dorp', 'ideal', 'rq'], default='dorp')
    green.add_argument('--p', type=int)
    green.add_argument('--relation', action='append',
                       choices=list(enums.KEYED_KINDS) + [enums.J_STAR])

    verify = commands.add_parser('verify', parents=[common], help="run a verification suite")
    verify.add_argument('--suite', choices=list(suites.SUITES), required=True)
    verify.add_argument('--n', type=int, help="largest chain size; each suite has its own default")

    ranks = commands.add_parser('rank', parents=[common], help="closure-backed rank certificate")
    ranks.add_argument('--object', choices=enums.RANK_OBJECTS, required=True)
    ranks.add_argument('--n', type=int, required=True)
    ranks.add_argument('--p', type=int)
    ranks.add_argument('--skip-irredundancy', action='store_true')

    factorize = commands.add_parser('factorize', parents=[common], help="constructive factorizations of a map")
    factorize.add_argument('--map', dest='literal', required=True)

    commands.add_parser('oeis-check', parents=[common], help="look up the computed sequences")
    return parser


def _options_from(args):
    overrides = {}
    for name in ('oracle_bound', 'jobs', 'seed', 'cache_dir', 'offline'):
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    return overrides


def _require_p(args):
    if args.p is None:
        raise errors.DomainError("--p is required for --object %s" % args.object)
    return args.p


def _count(args, out):
    table = counting.build_table(args.table, args.n, p=args.p, r=args.r)
    out.write(table.to_csv() if args.format == 'csv' else table.to_json() + '\n')
    return enums.ExitCode.OK


def _enumerate(args, out):
    n = args.n
    if args.object == 'all':
        elements = (rho for rho in enumeration.enumerate_all_partial_maps(n) if maps.in_dorp(rho))
    elif args.object == 'ls':
        elements = enumeration.enumerate_ls(n)
    elif args.object == 'drp':
        elements = enumeration.enumerate_drp(n)
    elif args.object == 'ideal':
        elements = enumeration.enumerate_ideal(n, _require_p(args))
    elif args.object == 'jstar':
        elements = enumeration.enumerate_jstar(n, _require_p(args))
    else:
        elements = enumeration.enumerate_dorp(n)

    if args.format == 'json':
        out.write(utils.dump_json({
            'schema': enums.SCHEMA_VERSION,
            'object': args.object,
            'n': n,
            'elements': helpers.literals(elements),
        }) + '\n')
    else:
        for rho in elements:
            out.write(rho.literal() + '\n')
    return enums.ExitCode.OK


def _greens(args, out):
    if args.object == 'rq':
        carrier = closure.rees_quotient(args.n, _require_p(args))
    elif args.object == 'ideal':
        carrier = enumeration.enumerate_ideal(args.n, _require_p(args))
    else:
        carrier = enumeration.enumerate_dorp(args.n)
    kinds = [enums.canonical_kind(kind) for kind in (args.relation or enums.KEYED_KINDS)]
    out.write(greens.EggBox(carrier, kinds).to_json() + '\n')
    return enums.ExitCode.OK


def _report_exit(report):
    return enums.ExitCode.OK if report.passed else enums.ExitCode.VERIFICATION_FAILURE


def _verify(args, out):
    report = suites.run_suite(args.suite, n=args.n)
    out.write(report.to_json() + '\n')
    return _report_exit(report)


def _rank(args, out):
    p = None if args.object == enums.DORP_OBJECT else _require_p(args)
    certificate = rank.certify_rank(args.object, args.n, p, check_irredundant=not args.skip_irredundancy)
    payload = certificate.as_dict()
    payload['schema'] = enums.SCHEMA_VERSION
    out.write(utils.dump_json(payload) + '\n')
    return enums.ExitCode.OK if certificate.passed else enums.ExitCode.VERIFICATION_FAILURE


def _factorize(args, out):
    rho = maps.parse_literal(args.literal)
    words = generators.factorize(rho)
    out.write(utils.dump_json({
        'schema': enums.SCHEMA_VERSION,
        'map': rho.literal(),
        'words': [word.as_dict() for word in words],
    }) + '\n')
    if all(word.recomposes() for word in words):
        return enums.ExitCode.OK
    return enums.ExitCode.VERIFICATION_FAILURE


def _oeis_check(args, out):
    report = oeis.check()
    out.write(report.to_json() + '\n')
    return _report_exit(report)


COMMANDS = {
    'count': _count,
    'enumerate': _enumerate,
    'greens': _greens,
    'verify': _verify,
    'rank': _rank,
    'factorize': _factorize,
    'oeis-check': _oeis_check,
}


def _run(args, out):
    with config.override(**_options_from(args)):
        return COMMANDS[args.command](args, out)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else enums.ExitCode.USAGE

    try:
        if args.verbose:
            with helpers.debug('dorp', stream=stderr):
                return _run(args, stdout)
        return _run(args, stdout)
    except (errors.ParseError, errors.DomainError, errors.SizeMismatch, errors.NotGeneratedError) as exc:
        stderr.write('error: %s\n' % exc)
        return enums.ExitCode.USAGE
    except errors.ResourceLimitError as exc:
        stderr.write('error: %s\n' % exc)
        return enums.ExitCode.RESOURCE_LIMIT
    except errors.NetworkError as exc:
        stderr.write('error: %s\n' % exc)
        return enums.ExitCode.NETWORK
