r"""
Command line interface::

    fieldbv verify FILE... [options]
    fieldbv gen jolt-or --bits B --field P [-o FILE] [--mutate]
    fieldbv gen random --seed S [--depth D] [--vars K] [--field P]

``verify`` exits with 0 if every problem is valid, 1 if some
problem is invalid, 2 if some verdict is unknown and 3 or 4 on
input errors or resource failures, whichever is largest.
"""
import argparse
import logging
import shlex
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from .. import _settings
from .._constants import __version__
from ..errors import (ParseError, SortMismatch, NonPrimeField, Unsupported,
                      UnboundVariable, ConstraintViolation, Timeout)
from .. import benchgen
from .parser import parse_problem
from .problem import Verdict, pretty_print_problem
from .pipeline import run_pipeline
from .report import emit_report

__all__ = ['main']

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 3
EXIT_RESOURCE_ERROR = 4

_INPUT_ERRORS = (ParseError, SortMismatch, NonPrimeField, Unsupported,
                 UnboundVariable, ConstraintViolation, OSError)


def _limit_memory(limit):
    try:
        import resource
    except ImportError:
        warnings.warn('Memory limit not supported on this platform.')
        return
    soft, hard = resource.getrlimit(resource.RLIMIT_AS)
    if hard != resource.RLIM_INFINITY:
        limit = min(limit, hard)
    resource.setrlimit(resource.RLIMIT_AS, (limit, hard))


def _apply_settings(settings):
    for name, value in settings.items():
        getattr(_settings, 'set_' + name)(value)


def _per_file(path, source, batch):
    # one output file per problem in batch mode
    if path is None or not batch:
        return path
    p = Path(path)
    return str(p.with_name(p.stem + '.' + Path(source).stem + p.suffix))


def _verify_file(source, settings, fmt, trace, dimacs, batch):
    r"""
    Verify one file; returns ``(exit code, report text)``.

    Runs in worker processes, so it returns plain values only.
    """
    _apply_settings(settings)
    try:
        with open(source) as f:
            problem = parse_problem(f.read(), name=source)
    except _INPUT_ERRORS as err:
        return EXIT_INPUT_ERROR, source + ': error: ' + str(err) + '\n'

    dimacs = _per_file(dimacs, source, batch)
    try:
        if dimacs is None:
            verdict = run_pipeline(problem)
        else:
            with open(dimacs, 'w') as fp:
                verdict = run_pipeline(problem, dimacs=fp)
    except Timeout as err:
        verdict = Verdict('unknown', reason='timeout in ' + err.stage,
                          name=source)
    except Unsupported as err:
        return EXIT_INPUT_ERROR, source + ': error: ' + str(err) + '\n'
    except MemoryError:
        return EXIT_RESOURCE_ERROR, source + ': error: out of memory\n'

    trace = _per_file(trace, source, batch)
    if trace is not None and verdict.trace is not None:
        with open(trace, 'w') as fp:
            verdict.trace.write_jsonl(fp)
    return verdict.exit_code, emit_report(verdict, fmt)


def _worker_init(settings, memory_limit):
    _limit_memory(memory_limit)
    _apply_settings(settings)


def _verify(args):
    settings = {
        'case_splits': not args.no_case_splits,
        'ineq_fallback': not args.no_ineq_fallback,
        'countermodel_check': not args.no_countermodel_check,
        'audit': args.oracle_check,
        'sat_backend': args.sat_backend,
        'timeout': args.timeout,
    }
    if args.external_solver is not None:
        settings['external_solver'] = shlex.split(args.external_solver)
    memory_limit = args.memory_limit * 2**20
    _apply_settings(settings)
    _settings.set_memory_limit(memory_limit)

    batch = len(args.files) > 1
    jobs = [(f, settings, args.format, args.trace, args.dimacs, batch)
            for f in args.files]
    if args.jobs > 1 and batch:
        with ProcessPoolExecutor(args.jobs, initializer=_worker_init,
                                 initargs=(settings, memory_limit)) as pool:
            results = list(pool.map(_verify_file, *zip(*jobs)))
    else:
        _limit_memory(memory_limit)
        results = [_verify_file(*job) for job in jobs]

    code = 0
    for c, text in results:
        sys.stdout.write(text)
        code = max(code, c)
    return code


def _bench_spec(args):
    if args.family == 'jolt-or':
        return benchgen.BenchSpec(args.family, bits=args.bits, p=args.field,
                                  mutate=args.mutate)
    return benchgen.BenchSpec(args.family, p=args.field, seed=args.seed,
                              depth=args.depth, var_count=args.vars)


def _gen(args):
    try:
        problem = benchgen.generate(_bench_spec(args))
    except (ValueError, ConstraintViolation) as err:
        sys.stderr.write('error: ' + str(err) + '\n')
        return EXIT_INPUT_ERROR
    text = pretty_print_problem(problem) + '\n'
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, 'w') as fp:
            fp.write(text)
    return 0


def _parser():
    parser = argparse.ArgumentParser(
        prog='fieldbv',
        description='Verify finite field constraints against '
                    'bit-vector specifications.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for stages, -vv for every rule.')
    sub = parser.add_subparsers(dest='command', required=True)

    verify = sub.add_parser('verify', help='Decide problem files.')
    verify.add_argument('files', nargs='+')
    verify.add_argument('--timeout', type=float,
                        default=_settings.get_timeout(),
                        help='Seconds per problem (default: %(default)s).')
    verify.add_argument('--memory-limit', type=int,
                        default=_settings.get_memory_limit() // 2**20,
                        help='Address space ceiling in MiB '
                             '(default: %(default)s).')
    verify.add_argument('--trace', default=None,
                        help='Write the rule trace as JSON lines.')
    verify.add_argument('--dimacs', default=None,
                        help='Write the final CNF in DIMACS format.')
    verify.add_argument('--format', choices=('human', 'lines'),
                        default='human')
    verify.add_argument('--oracle-check', action='store_true',
                        help='Audit range analysis by enumeration.')
    verify.add_argument('--no-case-splits', action='store_true')
    verify.add_argument('--no-ineq-fallback', action='store_true')
    verify.add_argument('--no-countermodel-check', action='store_true')
    verify.add_argument('--sat-backend', choices=('internal', 'external'),
                        default='internal')
    verify.add_argument('--external-solver', default=None,
                        help='Command of a DIMACS SAT solver.')
    verify.add_argument('-j', '--jobs', type=int, default=1)
    verify.set_defaults(run=_verify)

    gen = sub.add_parser('gen', help='Generate problem files.')
    families = gen.add_subparsers(dest='family', required=True)
    jolt = families.add_parser('jolt-or')
    jolt.add_argument('--bits', type=int, required=True)
    jolt.add_argument('--field', type=int, required=True)
    jolt.add_argument('--mutate', action='store_true')
    jolt.add_argument('-o', '--output', default=None)
    rand = families.add_parser('random')
    rand.add_argument('--seed', type=int, required=True)
    rand.add_argument('--depth', type=int, default=2)
    rand.add_argument('--vars', type=int, default=2)
    rand.add_argument('--field', type=int, default=7)
    rand.add_argument('-o', '--output', default=None)
    gen.set_defaults(run=_gen)
    return parser


def main(argv=None):
    args = _parser().parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)
    logging.basicConfig(level=level[min(args.verbose, 2)],
                        format='%(levelname)s %(name)s: %(message)s')
    logger.debug('arguments %s', vars(args))
    try:
        return args.run(args)
    except ValueError as err:
        sys.stderr.write('error: ' + str(err) + '\n')
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
