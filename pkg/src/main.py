"""
Quiver Hecke superalgebra workbench command line
"""

import os
import sys
import logging
import argparse
from typing import List, Optional

# add project root directory to Python path
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
sys.path.insert(0, project_root)

from borcherds.params import BorcherdsError
from src.config.run_config import PI_MODES, RunConfig
from src.core.runner import SuiteRunner
from src.core.suites import SuiteContext, explain, suite_ids
from src.utils.config_loader import ConfigLoader, parse_sequence, validate_bundle
from src.utils.data_utils import ReportWriter
from src.utils.logging_utils import RunLogger, configure_logging

logger = logging.getLogger(__name__)

DEFAULT_DATUM = os.path.join(project_root, 'templates', 'rank2_odd.yaml')

# subcommands that run a single suite
SINGLE_SUITES = {
    'pair': 'pairing',
    'serre-cat': 'serre-cat',
    'mackey': 'mackey',
    'trunc-dim': 'trunc-dim',
}


def _add_run_arguments(parser: argparse.ArgumentParser, suites: bool) -> None:
    group = parser.add_argument_group("run parameters")
    group.add_argument("--config", help="datum file (YAML); defaults to the bundled rank-2 odd datum")
    if suites:
        group.add_argument("--suite", nargs='*', metavar="NAME", choices=suite_ids(),
                           help="suites to run; all when omitted, none when given without names")
    group.add_argument("--only", help="run only the checks under this dotted id prefix, e.g. 'onh.center'")
    group.add_argument("--max-height", type=int, help="largest weight height")
    group.add_argument("--order", type=int, help="q-adic truncation order of dimension series")
    group.add_argument("--pi", choices=PI_MODES, dest="pi_mode", help="compare generically or at pi = +1 / -1")
    group.add_argument("--seed", type=int, help="random seed")
    group.add_argument("--jobs", type=int, help="number of worker threads")
    group.add_argument("--degree-bound", type=int, help="monomial degree bound for operator identities")
    group.add_argument("--samples", type=int, help="random trials per property")
    group.add_argument("--out", help="report path; the report goes to stdout when omitted")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """parse command line arguments"""
    parser = argparse.ArgumentParser(description="quiver Hecke superalgebra verification workbench")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    parser.add_argument("--log-file", help="also write the log to this file")
    commands = parser.add_subparsers(dest="command", required=True)

    _add_run_arguments(commands.add_parser("run", help="run verification suites"), suites=True)

    explain_parser = commands.add_parser("explain", help="describe the identity a check verifies")
    explain_parser.add_argument("check_id", help="suite id or dotted check id")

    pair = commands.add_parser("pair", help="graded dimensions against the covering form")
    _add_run_arguments(pair, suites=False)
    pair.add_argument("--left", help="left sequence, e.g. 'i j'")
    pair.add_argument("--right", help="right sequence, needs --left")

    serre = commands.add_parser("serre-cat", help="categorified Serre relation")
    _add_run_arguments(serre, suites=False)
    serre.add_argument("--i", dest="vertex_i", help="real vertex")
    serre.add_argument("--j", dest="vertex_j", help="second vertex, needs --i")

    mackey = commands.add_parser("mackey", help="Mackey filtration dimensions")
    _add_run_arguments(mackey, suites=False)
    mackey.add_argument("--left", help="first word of the induced module")
    mackey.add_argument("--right", help="second word, needs --left")

    trunc = commands.add_parser("trunc-dim", help="idempotent truncation dimensions")
    _add_run_arguments(trunc, suites=False)

    template = commands.add_parser("template", help="write a datum file with a run block")
    template.add_argument("path", help="output YAML path")

    return parser.parse_args(argv)


def _only_prefix(args: argparse.Namespace, context: SuiteContext) -> Optional[str]:
    """check id prefix selected by the options of a single-suite subcommand"""
    suite = SINGLE_SUITES[args.command]
    datum = context.datum
    parts = []
    if args.command in ('pair', 'mackey') and args.left:
        parts.append(context.seq_id(parse_sequence(datum, args.left)))
        if args.right:
            parts.append(context.seq_id(parse_sequence(datum, args.right)))
    elif args.command == 'serre-cat' and args.vertex_i:
        pair = [datum.index(args.vertex_i)]
        if args.vertex_j:
            pair.append(datum.index(args.vertex_j))
        parts.append(context.seq_id(pair))
    if not parts:
        return args.only or suite
    return '.'.join([suite] + parts)


def build_context(args: argparse.Namespace) -> SuiteContext:
    """load the datum file and merge its run block with the command line"""
    path = args.config or DEFAULT_DATUM
    bundle = ConfigLoader().load(path)
    validate_bundle(bundle)

    config = RunConfig.from_mapping(dict(bundle.run, datum_path=path))
    suites = getattr(args, 'suite', None)
    if args.command in SINGLE_SUITES:
        suites = [SINGLE_SUITES[args.command]]
    config = config.with_overrides(
        suites=suites,
        only=args.only,
        max_height=args.max_height,
        order=args.order,
        pi_mode=args.pi_mode,
        seed=args.seed,
        jobs=args.jobs,
        degree_bound=args.degree_bound,
        samples=args.samples,
        out=args.out,
    )
    context = SuiteContext(bundle.datum, bundle.qtable, bundle.gamma, config)
    if args.command in SINGLE_SUITES:
        context.config = config.with_overrides(only=_only_prefix(args, context))
    return context


def run(context: SuiteContext) -> int:
    """run the configured suites and write the report; returns the exit status"""
    config = context.config
    run_logger = RunLogger(__name__, datum=context.datum.name, seed=config.seed)
    result = SuiteRunner(context, run_logger).run()

    header = ReportWriter.header(context.datum.to_json(), config.seed, config.pi_mode)
    if config.out:
        writer = ReportWriter(config.out)
        writer.save_report(header, result.records)
        writer.save_tables(result.tables)
        writer.save_timings(result.timings)
        run_logger.info("report saved", path=config.out)
    else:
        sys.stdout.write(ReportWriter.render(header, result.records))
    return result.exit_status


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    configure_logging(args.verbose, args.log_file)

    try:
        if args.command == 'explain':
            entry = explain(args.check_id)
            print(f"{args.check_id}: {entry.topic}\n{entry.identity}")
            return 0
        if args.command == 'template':
            ConfigLoader().save_template(args.path)
            return 0
        return run(build_context(args))
    except (BorcherdsError, ValueError, KeyError, OSError) as e:
        logger.error(f"{args.command} failed: {str(e)}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
