"""
Command-line surface: build families, run verification suites, run extremal searches and
inspect the configuration.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error, 3 I/O or schema
error.
"""

import argparse
import json
import sys
import time
from pathlib import Path
from typing import List, Optional, TextIO

import jsonschema

from cli.report import (certificate_report, family_summary, format_q, issues_report,
                        search_report, settings_report)
from core import __version__
from core.certificates import write_certificates
from core.config import ConfigManager, get_config, set_config
from core.enumeration import GraphFilter, extremal_search
from core.errors import CapabilityError, DomainError, NumericError
from core.families import FamilyId, build_family
from core.graph_io import encode_graph6, to_dot
from core.log_writer import get_logger, setup_logging
from core.spectral import q_index
from core.suites import SuiteOptions, run_suite, suite_names

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3

TOLERANCE_FLAGS = {
    'residual_tol': 'residual',
    'agreement_tol': 'agreement',
    'gap': 'gap',
    'strict_margin': 'strict_margin',
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qindex-verify",
        description="Signless Laplacian Q-index verification toolkit",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--config', metavar='FILE', help="configuration file (JSON)")
    parser.add_argument('--log-dir', metavar='DIR', help="directory for session logs")
    parser.add_argument('--verbose', '-v', action='store_true', help="echo log messages on stderr")

    commands = parser.add_subparsers(dest='command', required=True)

    family = commands.add_parser('family', help="build a family member")
    family.add_argument('family_id', metavar='ID', help='family name, e.g. "K1v(kP2+P1)" or L2')
    family.add_argument('--k', type=int, required=True)
    family.add_argument('--q', action='store_true', help="print the Q-index")
    family.add_argument('--graph6', action='store_true', help="print graph6")
    family.add_argument('--dot', action='store_true', help="print DOT")

    verify = commands.add_parser('verify', help="run a verification suite")
    verify.add_argument('suite', choices=suite_names())
    verify.add_argument('--k-min', type=int)
    verify.add_argument('--k-max', type=int)
    verify.add_argument('--m-max', type=int)
    verify.add_argument('--out', metavar='FILE', help="write certificates as JSON")
    verify.add_argument('--csv', metavar='FILE', help="write (k, q, bound) tables of the bound lemmas")
    _add_run_options(verify)
    for flag in TOLERANCE_FLAGS:
        verify.add_argument('--' + flag.replace('_', '-'), dest=flag, type=float)

    search = commands.add_parser('search', help="exhaustive extremal search over m edges")
    search.add_argument('m', type=int)
    search.add_argument('--filter', default=GraphFilter.TWO_LEAVES_FREE.value,
                        choices=[f.value for f in GraphFilter])
    search.add_argument('--max-n', type=int)
    search.add_argument('--out', metavar='FILE', help="write the search result as JSON")
    _add_run_options(search)

    config = commands.add_parser('config', help="show, validate, reset or export the configuration")
    config.add_argument('action', choices=['show', 'validate', 'reset', 'export'])
    config.add_argument('path', nargs='?', metavar='FILE', help="export target")
    return parser


def _add_run_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument('--workers', type=int, help="enumeration worker processes")
    sub.add_argument('--no-cache', action='store_true', help="ignore the enumeration cache")


class VerifierCLI:
    """Dispatches parsed arguments to the command handlers."""

    def __init__(self, stdout: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.logger = get_logger()

    def emit(self, text: str) -> None:
        self.stdout.write(text + "\n")

    def run(self, argv: Optional[List[str]] = None) -> int:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code == 0 else EXIT_USAGE

        if args.config:
            set_config(ConfigManager(args.config))
        output = get_config().output
        setup_logging(args.log_dir or output.log_dir,
                      enable_console=args.verbose or output.enable_console_log,
                      enable_json=output.enable_json_log)
        self.logger = get_logger()

        handler = {
            'family': self._cmd_family,
            'verify': self._cmd_verify,
            'search': self._cmd_search,
            'config': self._cmd_config,
        }[args.command]
        try:
            return handler(args)
        except (DomainError, CapabilityError) as e:
            self.logger.log_error(f"{args.command}: {e}")
            sys.stderr.write(f"error: {e}\n")
            return EXIT_USAGE
        except NumericError as e:
            self.logger.log_error(f"{args.command}: {e}")
            sys.stderr.write(f"numeric failure: {e}\n")
            return EXIT_FAILURE
        except OSError as e:
            self.logger.log_error(f"{args.command}: I/O error: {e}")
            sys.stderr.write(f"I/O error: {e}\n")
            return EXIT_IO
        except jsonschema.ValidationError as e:
            self.logger.log_error(f"{args.command}: certificate rejected by schema: {e.message}")
            sys.stderr.write(f"schema error: {e.message}\n")
            return EXIT_IO

    def _apply_run_options(self, args: argparse.Namespace) -> None:
        config = get_config()
        if getattr(args, 'workers', None) is not None:
            if args.workers < 1:
                raise DomainError(f"--workers must be at least 1, got {args.workers}")
            config.update_setting('enumeration', 'workers', args.workers)
        if getattr(args, 'no_cache', False):
            config.update_setting('enumeration', 'cache_enabled', False)
        for flag, key in TOLERANCE_FLAGS.items():
            value = getattr(args, flag, None)
            if value is not None:
                if value <= 0:
                    raise DomainError(f"--{flag.replace('_', '-')} must be positive, got {value}")
                config.update_setting('tolerances', key, value)

    def _cmd_family(self, args: argparse.Namespace) -> int:
        instance = build_family(FamilyId.parse(args.family_id), args.k)
        digits = get_config().output.q_digits
        self.logger.log_info(family_summary(instance))
        if args.graph6 or not (args.q or args.dot):
            self.emit(encode_graph6(instance.graph))
        if args.q:
            self.emit(f"q = {format_q(q_index(instance.graph).q, digits)}")
        if args.dot:
            self.emit(to_dot(instance.graph, name=instance.id.name))
        return EXIT_OK

    def _cmd_verify(self, args: argparse.Namespace) -> int:
        self._apply_run_options(args)
        options = SuiteOptions(k_min=args.k_min, k_max=args.k_max, m_max=args.m_max,
                               csv_path=args.csv, workers=args.workers)
        start = time.time()
        certificates = run_suite(args.suite, options)
        elapsed = time.time() - start
        if args.out:
            write_certificates(certificates, args.out)
        self.emit(certificate_report(certificates, args.suite, elapsed))
        failed = [c.claim_id for c in certificates if c.failed]
        self.logger.log_session_summary(suite=args.suite, certificates=len(certificates),
                                        failed=len(failed), elapsed_seconds=round(elapsed, 2))
        return EXIT_FAILURE if failed else EXIT_OK

    def _cmd_search(self, args: argparse.Namespace) -> int:
        self._apply_run_options(args)
        result = extremal_search(args.m, GraphFilter.parse(args.filter), args.max_n,
                                 workers=args.workers, use_cache=False if args.no_cache else None)
        if args.out:
            target = Path(args.out)
            with open(target, 'w', encoding='utf-8') as f:
                json.dump(result.to_dict(), f, indent=2)
                f.write("\n")
            self.logger.log_info(f"Search result written to {target}")
        self.emit(search_report(result, get_config().output.q_digits))
        return EXIT_OK

    def _cmd_config(self, args: argparse.Namespace) -> int:
        config = get_config()
        if args.action == 'show':
            self.emit(settings_report(config.get_all_settings()))
            return EXIT_OK
        if args.action == 'validate':
            issues = config.validate_settings()
            self.emit(issues_report(issues))
            return EXIT_FAILURE if issues['errors'] else EXIT_OK
        if args.action == 'export':
            if not args.path:
                raise DomainError("config export needs a target FILE")
            if not config.export_config(args.path):
                return EXIT_IO
            self.emit(f"Configuration exported to {args.path}")
            return EXIT_OK
        config.reset_to_defaults()
        if not config.save_config():
            return EXIT_IO
        self.emit(f"Configuration reset and saved to {config.config_file}")
        return EXIT_OK


def run_cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    return VerifierCLI(stdout).run(argv)
