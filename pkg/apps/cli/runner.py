"""
The `mahonia` command: argument parsing and dispatch to the services.

Exit codes: 0 success, 1 bad input or usage, 2 failed verification.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from django.conf import settings

from apps.cli import output
from apps.codes.serializers import CodeResultSerializer
from apps.codes.services import DECODERS, ENCODERS, TRANSFORMS
from apps.core.exceptions import MahoniaException, UsageError
from apps.foata.serializers import FixedQuerySerializer
from apps.foata.services import foata_phi, partial_foata
from apps.han.serializers import TraceSerializer
from apps.han.services import han_h_inverse, han_h_via_codes
from apps.permutations.domain import complement
from apps.permutations.serializers import MapResultSerializer
from apps.permutations.services import as_permutation, parse_code, parse_input, parse_spec
from apps.stats.serializers import StatResultSerializer
from apps.stats.services import StatisticKind, StatisticRegistry
from apps.verification.serializers import (
    DistributionTableSerializer,
    FixedPointListSerializer,
    SuiteResultSerializer,
)
from apps.verification.services.verification_service import SUITE_CHOICES, VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERIFICATION_FAILED = 2

# (exit code, payload, text)
CommandResult = Tuple[int, Dict, str]


class MahoniaArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing usage and exiting with 2."""

    def error(self, message):
        raise UsageError(message)


# ==================== Commands ====================

def _spec(args):
    return parse_spec(args.spec) if getattr(args, 'spec', None) else None


def cmd_stat(args) -> CommandResult:
    statistic = StatisticRegistry.require(args.stat)
    payload = StatResultSerializer.describe(statistic, parse_input(args.input, _spec(args)))
    return EXIT_OK, payload, output.stat_text(payload)


def cmd_code(args) -> CommandResult:
    if args.encode:
        sigma = as_permutation(parse_input(args.input))
        payload = CodeResultSerializer.encoded(args.encode, sigma, ENCODERS[args.encode](sigma))
    elif args.decode:
        code = parse_code(args.input)
        payload = CodeResultSerializer.decoded(args.decode, code, DECODERS[args.decode](code))
    else:
        code = parse_code(args.input)
        payload = CodeResultSerializer.describe('transform', args.transform, code, TRANSFORMS[args.transform](code))
    return EXIT_OK, payload, payload['output']


def cmd_map(args) -> CommandResult:
    if args.foata:
        word = parse_input(args.input, _spec(args))
        payload = MapResultSerializer.describe('foata', word, foata_phi(word))
        return EXIT_OK, payload, payload['output']

    sigma = as_permutation(parse_input(args.input, _spec(args)))
    if args.partial_foata is not None:
        payload = MapResultSerializer.describe(
            'partial-foata', sigma, partial_foata(args.partial_foata, sigma), k=args.partial_foata
        )
    elif args.han:
        payload = MapResultSerializer.describe('han', sigma, han_h_via_codes(sigma))
    elif args.han_inverse:
        payload = MapResultSerializer.describe('han-inverse', sigma, han_h_inverse(sigma))
    else:
        payload = MapResultSerializer.describe('complement', sigma, complement(sigma))
    return EXIT_OK, payload, payload['output']


def cmd_trace(args) -> CommandResult:
    payload = TraceSerializer.describe(as_permutation(parse_input(args.input)))
    return EXIT_OK, payload, output.trace_text(payload)


def cmd_fixed(args) -> CommandResult:
    if args.list is not None:
        if args.list < 1:
            raise UsageError(f"--list must be at least 1, got {args.list}")
        points = VerificationService(max_n=args.max_n).fixed_points(args.list)
        payload = FixedPointListSerializer({
            'n': args.list,
            'count': len(points),
            'fixed_points': [str(sigma) for sigma in points],
            'permutations': points,
        }).data
        return EXIT_OK, payload, '\n'.join(payload['fixed_points'])

    if args.input is None:
        raise UsageError("fixed needs a permutation or --list N")
    payload = FixedQuerySerializer.describe(as_permutation(parse_input(args.input)))
    return EXIT_OK, payload, output.fixed_text(payload, args.predicate)


def cmd_verify(args) -> CommandResult:
    service = VerificationService(
        max_n=args.max_n,
        max_class_size=args.max_class_size,
        partitions=args.partitions,
        distributed=args.distributed
    )
    reports = service.run_suite(args.suite, args.n)
    payload = SuiteResultSerializer.describe(args.suite, args.n, reports)
    code = EXIT_OK if payload['passed'] else EXIT_VERIFICATION_FAILED
    return code, payload, output.suite_text(payload)


def cmd_table(args) -> CommandResult:
    service = VerificationService(max_n=args.max_n, max_class_size=args.max_class_size)
    spec = _spec(args)
    if spec is not None:
        payload = DistributionTableSerializer.describe(service.table(args.stat, spec), spec.render())
    else:
        payload = DistributionTableSerializer.describe(service.table(args.stat, args.n), f"S_{args.n}")
    text = output.table_csv(payload) if args.format == output.FORMAT_CSV else output.table_text(payload)
    return EXIT_OK, payload, text


COMMANDS: Dict[str, Callable] = {
    'stat': cmd_stat,
    'code': cmd_code,
    'map': cmd_map,
    'trace': cmd_trace,
    'fixed': cmd_fixed,
    'verify': cmd_verify,
    'table': cmd_table,
}


# ==================== Parser ====================

def build_parser() -> MahoniaArgumentParser:
    """
    Build the `mahonia` argument parser.

    Returns:
        Parser with one subparser per command
    """
    formats = argparse.ArgumentParser(add_help=False)
    formats.add_argument('--format', choices=[output.FORMAT_TEXT, output.FORMAT_JSON], default=output.FORMAT_TEXT)

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument('--max-n', type=int, default=None, help='enumeration cap (default MAHONIA_MAX_N)')
    caps.add_argument('--max-class-size', type=int, default=None, help='cap on |R(X)| (default MAHONIA_MAX_CLASS_SIZE)')

    parser = MahoniaArgumentParser(
        prog='mahonia',
        description='Mahonian statistics, Foata\'s and Han\'s bijections, and their exhaustive verification.'
    )
    subparsers = parser.add_subparsers(dest='command', parser_class=MahoniaArgumentParser)
    subparsers.required = True

    stat = subparsers.add_parser('stat', parents=[formats], help='evaluate a statistic')
    stat.add_argument('--stat', required=True, choices=StatisticRegistry.names())
    stat.add_argument('--spec', help='multiset spec such as 3,2,2,2 or 1^3,2^2')
    stat.add_argument('input')

    code = subparsers.add_parser('code', parents=[formats], help='encode, decode or transform codes')
    action = code.add_mutually_exclusive_group(required=True)
    action.add_argument('--encode', choices=sorted(ENCODERS))
    action.add_argument('--decode', choices=sorted(DECODERS))
    action.add_argument('--transform', choices=sorted(TRANSFORMS))
    code.add_argument('input')

    mapping = subparsers.add_parser('map', parents=[formats], help='apply a bijection')
    which = mapping.add_mutually_exclusive_group(required=True)
    which.add_argument('--foata', action='store_true', help='Phi, on permutations and words')
    which.add_argument('--partial-foata', type=int, metavar='K', help='the partial map phi_K')
    which.add_argument('--han', action='store_true', help='H = I^-1 o M')
    which.add_argument('--han-inverse', action='store_true', help='H^-1 = M^-1 o I')
    which.add_argument('--complement', action='store_true', help='c(sigma)_i = n + 1 - sigma_i')
    mapping.add_argument('--spec', help='multiset spec for words')
    mapping.add_argument('input')

    trace = subparsers.add_parser('trace', parents=[formats], help='reduction trace and construction of H')
    trace.add_argument('input')

    fixed = subparsers.add_parser('fixed', parents=[formats, caps], help='fixed-point queries')
    predicate = fixed.add_mutually_exclusive_group()
    predicate.add_argument('--strong', dest='predicate', action='store_const', const='strong')
    predicate.add_argument('--han', dest='predicate', action='store_const', const='han')
    predicate.add_argument('--foata', dest='predicate', action='store_const', const='foata')
    predicate.add_argument('--list', type=int, metavar='N', help='list the 2^(N-1) fixed points of H')
    fixed.add_argument('input', nargs='?')

    verify = subparsers.add_parser('verify', parents=[formats, caps], help='run verification suites')
    verify.add_argument('--suite', choices=SUITE_CHOICES, default='all')
    verify.add_argument('--n', type=int, default=settings.MAHONIA_DEFAULT_N)
    verify.add_argument('--partitions', type=int, default=None)
    verify.add_argument('--distributed', action='store_true', default=None, help='dispatch partitions to Celery')

    table = subparsers.add_parser('table', parents=[caps], help='distribution table of a statistic')
    table.add_argument('--stat', required=True, choices=StatisticRegistry.names(StatisticKind.SCALAR))
    table.add_argument('--n', type=int, default=settings.MAHONIA_DEFAULT_N)
    table.add_argument('--spec', help='tabulate over R(X) instead of S_n')
    table.add_argument(
        '--format',
        choices=[output.FORMAT_TEXT, output.FORMAT_JSON, output.FORMAT_CSV],
        default=output.FORMAT_TEXT
    )

    return parser


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Parse argv, run the command and write its output.

    Args:
        argv: Arguments without the program name
        stdout: Stream for results (default sys.stdout)
        stderr: Stream for diagnostics (default sys.stderr)

    Returns:
        Process exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
        if getattr(args, 'n', None) is not None and args.n < 1:
            raise UsageError(f"--n must be at least 1, got {args.n}")
        code, payload, text = COMMANDS[args.command](args)
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except MahoniaException as e:
        stderr.write(f"mahonia: error: {e}\n")
        return EXIT_INPUT_ERROR

    rendered = output.render_json(payload) if args.format == output.FORMAT_JSON else text
    stdout.write(rendered + '\n')
    logger.debug(f"{args.command} finished with exit code {code}")
    return code
