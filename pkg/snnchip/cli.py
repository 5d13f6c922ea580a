"""
Command Line
============

    snnchip run --program P --stimulus S --cycles N --trace OUT.csv
                [--vcd OUT.vcd] [--spi-divisor D | --direct] [--summary]
    snnchip check --episodes N --seed K [--cycles C] [--sequential]
    snnchip emit-verilog --out DIR

Exit codes: 0 success, 1 mismatch or failed lint, 2 usage or input error.
The log level comes from ``--log-level``, then ``SNNCHIP_LOG_LEVEL``, then
WARNING.
"""

from typing import List, Optional
import argparse
import logging
import os
import sys

from .chip.simulation import ProgrammingMode, SimulationConfig, run_simulation, summarize_trace
from .errors import FormatParseError
from .formats.program import parse_program
from .formats.stimulus import hold_stimulus, parse_stimulus
from .formats.tracefile import write_trace_csv, write_trace_vcd
from .hdl.emitter import emit_verilog, write_bundle
from .spi.waveform import MIN_SCLK_DIVISOR
from .verify.differential import CheckConfig, run_check

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

LOG_LEVEL_ENV = "SNNCHIP_LOG_LEVEL"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
DEFAULT_LOG_LEVEL = "WARNING"


def resolve_log_level(cli_level: Optional[str] = None) -> str:
    """Pick the log level: command line, then environment, then WARNING."""
    level = cli_level or os.getenv(LOG_LEVEL_ENV) or DEFAULT_LOG_LEVEL
    level = level.upper()
    return level if level in LOG_LEVELS else DEFAULT_LOG_LEVEL


def configure_logging(level: str) -> None:
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("snnchip").setLevel(level)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snnchip",
        description="Cycle-accurate model of a programmable 2x3 spiking neuron array chip",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s run --program prog.txt --stimulus stim.csv --cycles 100 --trace out.csv
  %(prog)s run --program prog.txt --stimulus stim.csv --cycles 100 --trace out.csv --direct --summary
  %(prog)s check --episodes 1000 --seed 7
  %(prog)s emit-verilog --out build/hdl
        """)
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS,
                        help=f"Logging level (default: ${LOG_LEVEL_ENV} or {DEFAULT_LOG_LEVEL})")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    run = commands.add_parser("run", help="Program the chip and simulate a stimulus")
    run.add_argument("--program", required=True, metavar="FILE", help="Register program file")
    run.add_argument("--stimulus", required=True, metavar="FILE", help="Stimulus CSV file")
    run.add_argument("--cycles", required=True, type=int, metavar="N", help="Stimulus cycles to simulate")
    run.add_argument("--trace", required=True, metavar="FILE", help="Output trace CSV")
    run.add_argument("--vcd", metavar="FILE", help="Also write a VCD waveform")
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--spi-divisor", type=int, default=MIN_SCLK_DIVISOR, metavar="D",
                      help=f"System cycles per SCLK period when programming over SPI (default: {MIN_SCLK_DIVISOR})")
    mode.add_argument("--direct", action="store_true", help="Load the program straight into the register file")
    run.add_argument("--summary", action="store_true", help="Print per-neuron spike counts")

    check = commands.add_parser("check", help="Differential test of the model against the oracle")
    check.add_argument("--episodes", type=int, default=CheckConfig.episodes, metavar="N")
    check.add_argument("--seed", type=int, default=CheckConfig.seed, metavar="K")
    check.add_argument("--cycles", type=int, default=CheckConfig.cycles_per_episode, metavar="N",
                       help="Cycles per episode")
    check.add_argument("--sequential", action="store_true", help="Run episodes without a worker pool")

    emit = commands.add_parser("emit-verilog", help="Write the design as Verilog-2005")
    emit.add_argument("--out", required=True, metavar="DIR", help="Output directory")

    return parser


def cmd_run(args: argparse.Namespace) -> int:
    try:
        if args.cycles < 0:
            raise ValueError(f"--cycles must be >= 0, got {args.cycles}")
        program = parse_program(_read_text(args.program), source=args.program)
        stimulus = parse_stimulus(_read_text(args.stimulus), source=args.stimulus, cycles=args.cycles)
        config = SimulationConfig(
            mode=ProgrammingMode.DIRECT if args.direct else ProgrammingMode.SPI,
            spi_divisor=args.spi_divisor
        )
    except (FormatParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    trace = run_simulation(program, hold_stimulus(stimulus, args.cycles), args.cycles, config)

    try:
        _write_text(args.trace, write_trace_csv(trace))
        if args.vcd:
            _write_text(args.vcd, write_trace_vcd(trace))
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.summary:
        print(summarize_trace(trace).format())
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    try:
        config = CheckConfig(
            episodes=args.episodes,
            seed=args.seed,
            cycles_per_episode=args.cycles,
            parallel_processing=not args.sequential
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    report = run_check(config)
    print(report.format())
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_emit_verilog(args: argparse.Namespace) -> int:
    bundle = emit_verilog()
    issues = bundle.lint()
    if issues:
        for issue in issues:
            logger.error("lint: %s", issue)
            print(f"lint: {issue}", file=sys.stderr)
        return EXIT_MISMATCH

    try:
        paths = write_bundle(bundle, args.out)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    for path in paths:
        print(path)
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "check": cmd_check,
    "emit-verilog": cmd_emit_verilog,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    configure_logging(resolve_log_level(args.log_level))
    return COMMANDS[args.command](args)
