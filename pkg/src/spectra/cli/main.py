from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence, Tuple

from spectra.compiler import (
    CompilationError,
    Construction,
    compile_machine,
    compiled_vocabulary,
    verify_compilation,
)
from spectra.config.limits import LimitsError, WorkbenchLimits, load_limits
from spectra.errors import CapExceededError, SpectraError
from spectra.grounding import ground, satisfiable, to_cnf
from spectra.logging import VerdictLogger
from spectra.logic.semantics import UnboundVariableError, evaluate
from spectra.logic.structures import StructureError
from spectra.logic.syntax import VocabularyError
from spectra.machines import BoundKind, Strategy, run_binary
from spectra.models import spectrum_up_to
from spectra.normalizer import (
    NormalizationError,
    normalize,
    normalized_to_sentence,
    verify_shape,
)
from spectra.reports import Report, render_structured, render_table
from spectra.textio import (
    DocumentValidationError,
    SentenceDocument,
    TextFormatError,
    load_tm,
    parse_sentence,
    parse_structure,
    print_dimacs,
    print_sentence,
)

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_DOCUMENT = 3
EXIT_CAP = 4
EXIT_COMPILATION = 5
EXIT_EVALUATION = 6
EXIT_LIMITS = 7

# Checked in order; the first matching family decides the exit status.
_EXIT_CODES: Tuple[Tuple[type, int], ...] = (
    (LimitsError, EXIT_LIMITS),
    (CapExceededError, EXIT_CAP),
    (TextFormatError, EXIT_DOCUMENT),
    (VocabularyError, EXIT_DOCUMENT),
    (StructureError, EXIT_DOCUMENT),
    (CompilationError, EXIT_COMPILATION),
    (NormalizationError, EXIT_COMPILATION),
    (UnboundVariableError, EXIT_EVALUATION),
)


def parse_range(value: str) -> Tuple[int, int]:
    """Parse ``A..B`` (inclusive) or a single size ``N``."""
    low, sep, high = value.partition("..")
    try:
        start, stop = (int(low), int(high)) if sep else (int(low), int(low))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid range '{value}', expected A..B")
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"Empty or non-positive range '{value}'")
    return start, stop


def _read(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentValidationError(f"Cannot read file: {exc.strerror}", path)


def _load_sentence(path: Path) -> SentenceDocument:
    return parse_sentence(_read(path))


def _limits(args: argparse.Namespace) -> WorkbenchLimits:
    limits = load_limits(args.limits) if args.limits else WorkbenchLimits()
    return limits.override(
        enumeration_cap=getattr(args, "enumeration_cap", None),
        window_cap=getattr(args, "window_cap", None),
        configuration_cap=getattr(args, "configuration_cap", None),
        n_min=getattr(args, "n_min", None),
        workers=args.workers,
    )


def _emit(args: argparse.Namespace, report: Report) -> None:
    if args.format == "structured":
        sys.stdout.write(render_structured(report))
    else:
        sys.stdout.write(render_table(report))


def _write_output(args: argparse.Namespace, text: str) -> None:
    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info("Wrote %s", path)
    else:
        sys.stdout.write(text)


def _verdict_logger(args: argparse.Namespace) -> Optional[VerdictLogger]:
    return VerdictLogger(args.verdict_log) if args.verdict_log else None


# Subcommands -------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    doc = _load_sentence(args.sentence)
    structure = parse_structure(_read(args.structure), doc.vocabulary, str(args.structure))
    truth = evaluate(doc.formula, structure)
    if args.format == "structured":
        sys.stdout.write(f"format 1\n{'true' if truth else 'false'}\n")
    else:
        sys.stdout.write(f"{'true' if truth else 'false'}\n")
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    doc = _load_sentence(args.sentence)
    limits = _limits(args)
    low = args.min_n
    report = spectrum_up_to(
        doc.formula,
        args.max_n,
        args.method,
        name=Path(args.sentence).stem,
        vocabulary=doc.vocabulary,
        cap=limits.enumeration_cap,
        workers=limits.workers,
        n_min=low,
    )
    verdicts = _verdict_logger(args)
    if verdicts is not None:
        for entry in report.entries:
            verdicts.log_verdict(
                command="spectrum",
                subject=report.sentence,
                n=entry.n,
                verdict="member" if entry.member else "non-member",
                method=report.method.value,
                seconds=entry.seconds,
            )
    _emit(args, report)
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace) -> int:
    doc = _load_sentence(args.sentence)
    ns = normalize(doc.formula, args.k, doc.vocabulary)
    problems = verify_shape(ns, args.k)
    for problem in problems:
        logger.error("Normal form check: %s", problem)
    _write_output(args, print_sentence(normalized_to_sentence(ns)))
    logger.info(
        "Normalized %s: %d aux relation(s), %d clause(s)",
        args.sentence,
        len(ns.auxiliary),
        len(ns.clauses),
    )
    return EXIT_COMPILATION if problems else EXIT_OK


def cmd_ground(args: argparse.Namespace) -> int:
    doc = _load_sentence(args.sentence)
    ns = normalize(doc.formula, None, doc.vocabulary)
    g = ground(ns, args.n)
    result = satisfiable(g)
    lines = [
        f"ground {Path(args.sentence).stem} at N={args.n}",
        f"atoms: {len(g.atoms)}",
        f"blocks: {len(g.blocks)}",
        f"size: {g.size}",
        f"satisfiable: {'yes' if result else 'no'}",
    ]
    if args.dimacs:
        cnf = to_cnf(g)
        path = Path(args.dimacs)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(print_dimacs(cnf), encoding="utf-8")
        lines.append(f"dimacs: {path} ({cnf.num_vars} variables, {len(cnf.clauses)} clauses)")
    prefix = "format 1\n" if args.format == "structured" else ""
    sys.stdout.write(prefix + "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_compile_tm(args: argparse.Namespace) -> int:
    tm = load_tm(args.machine)
    limits = _limits(args)
    report = compile_machine(tm, args.construction, args.k, limits.window_cap)
    if args.output:
        doc = SentenceDocument(compiled_vocabulary(report.sentence), report.sentence)
        _write_output(args, print_sentence(doc))
    _emit(args, report)
    return EXIT_OK


def cmd_simulate_tm(args: argparse.Namespace) -> int:
    tm = load_tm(args.machine)
    limits = _limits(args)
    verdict = run_binary(
        tm, args.n, args.bound, args.k or 1, args.strategy, limits.configuration_cap
    )
    _emit(args, verdict)
    return EXIT_OK


def cmd_verify_tm(args: argparse.Namespace) -> int:
    tm = load_tm(args.machine)
    limits = _limits(args)
    low, high = args.range
    report = verify_compilation(tm, args.construction, range(low, high + 1), args.k, limits)
    verdicts = _verdict_logger(args)
    if verdicts is not None:
        for entry in report.entries:
            verdicts.log_verdict(
                command="verify-tm",
                subject=tm.name,
                n=entry.n,
                verdict=entry.outcome.value,
                method=report.construction,
                seconds=entry.seconds,
                details={"satisfiable": entry.satisfiable, "oracle": entry.oracle},
            )
    _emit(args, report)
    return EXIT_OK if report.ok else EXIT_DISAGREEMENT


# Parser ------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limits", type=Path, help="YAML limits file (default: built-in limits)")
    common.add_argument(
        "--verdict-log", type=Path, help="Append per-N verdicts as JSON lines to this file"
    )
    common.add_argument("--workers", type=int, help="Worker processes for per-N work")
    common.add_argument(
        "--format",
        choices=["table", "structured"],
        default="table",
        help="Output format (default: table)",
    )
    common.add_argument("--output", type=Path, help="Write the document output to this path")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="INFO",
        help="Log level (default: INFO)",
    )
    return common


def _construction_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--construction",
        type=Construction.parse,
        choices=list(Construction),
        default=Construction.THREE_VAR,
        help="three-var, two-k-plus-1 or two-k-plus-2 (default: three-var)",
    )
    parser.add_argument("--k", type=int, help="Exponent k for the polynomial constructions")
    parser.add_argument("--window-cap", type=int, help="Maximum number of transition windows")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="spectra",
        description="First-order spectra workbench - model finding, normalization, "
        "grounding and Turing-machine compilation",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", parents=[common], help="Evaluate a sentence")
    check.add_argument("sentence", type=Path)
    check.add_argument("structure", type=Path)
    check.set_defaults(handler=cmd_check)

    spectrum = commands.add_parser("spectrum", parents=[common], help="Spectrum up to --max-n")
    spectrum.add_argument("sentence", type=Path)
    spectrum.add_argument("--max-n", type=int, required=True)
    spectrum.add_argument("--min-n", type=int, default=1)
    spectrum.add_argument(
        "--method",
        choices=["enumeration", "grounding", "enum", "ground"],
        default="enumeration",
    )
    spectrum.add_argument("--enumeration-cap", type=int)
    spectrum.set_defaults(handler=cmd_spectrum)

    norm = commands.add_parser("normalize", parents=[common], help="Print the normal form")
    norm.add_argument("sentence", type=Path)
    norm.add_argument("--k", type=int, help="Variable budget (default: the sentence's own)")
    norm.set_defaults(handler=cmd_normalize)

    grounding = commands.add_parser("ground", parents=[common], help="Ground at one size")
    grounding.add_argument("sentence", type=Path)
    grounding.add_argument("--n", type=int, required=True)
    grounding.add_argument("--dimacs", type=Path, help="Write the CNF in DIMACS format")
    grounding.set_defaults(handler=cmd_ground)

    compile_tm = commands.add_parser("compile-tm", parents=[common], help="Compile a machine")
    compile_tm.add_argument("machine", type=Path)
    _construction_arguments(compile_tm)
    compile_tm.set_defaults(handler=cmd_compile_tm)

    simulate = commands.add_parser("simulate-tm", parents=[common], help="Run a machine on N")
    simulate.add_argument("machine", type=Path)
    simulate.add_argument("--n", type=int, required=True)
    simulate.add_argument(
        "--bound", type=BoundKind, choices=list(BoundKind), default=BoundKind.LINEAR
    )
    simulate.add_argument("--k", type=int)
    simulate.add_argument("--strategy", type=Strategy, choices=list(Strategy), default=Strategy.BFS)
    simulate.add_argument("--configuration-cap", type=int)
    simulate.set_defaults(handler=cmd_simulate_tm)

    verify = commands.add_parser(
        "verify-tm", parents=[common], help="Ground-SAT against the simulator over a range"
    )
    verify.add_argument("machine", type=Path)
    _construction_arguments(verify)
    verify.add_argument("--range", type=parse_range, required=True, help="Sizes A..B")
    verify.add_argument("--n-min", type=int, help="Skip sizes below this")
    verify.add_argument("--configuration-cap", type=int)
    verify.set_defaults(handler=cmd_verify_tm)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for name in ("max_n", "min_n", "n", "k", "workers"):
        value = getattr(args, name, None)
        if value is not None and value < 1:
            parser.error(f"--{name.replace('_', '-')} must be at least 1")
    if getattr(args, "max_n", None) is not None and args.max_n < args.min_n:
        parser.error("--max-n must not be below --min-n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch the subcommand and map failures to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.getLogger().setLevel(getattr(logging, args.log_level))
    _validate(parser, args)
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except SpectraError as exc:
        code = next((c for kind, c in _EXIT_CODES if isinstance(exc, kind)), EXIT_EVALUATION)
        print(f"error: {exc}", file=sys.stderr)
        return code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
