import argparse
import json
import sys
from typing import List, Optional

from colorama import Fore, Style, init as colorama_init
from dotenv import load_dotenv

# Loading .env first
load_dotenv()

from src.graph import discover_with_symmetry
from src.survey import classify, run_survey
from src.tools import (
    DiscoveryParams,
    FileOpError,
    NoScheme,
    OracleLimitError,
    PatternError,
    Scheme,
    SchemeError,
    SchemeEvaluator,
    SurveyBudgetError,
    ConfigError,
    brute_count,
    brute_count_by_inversions,
    format_pattern_set,
    load_scheme,
    parse_pattern_set,
    save_scheme,
)
from src.utils.config import load_settings
from src.utils.logger import ActionType, log_run

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_SCHEME = 3
EXIT_MISMATCH = 4

BOLD = Style.BRIGHT
RESET = Style.RESET_ALL


class CommandFailed(Exception):
    """A command finished with a non-zero exit status and a log-worthy outcome."""

    def __init__(self, code: int, outcome: str):
        super().__init__(outcome)
        self.code = code
        self.outcome = outcome


def _emit(args, document: dict) -> None:
    if args.json:
        print(json.dumps(document, indent=2, sort_keys=True))


def _params(args, settings) -> DiscoveryParams:
    depth = args.depth if args.depth is not None else settings.max_depth
    norm = args.max_gap_norm if args.max_gap_norm is not None else settings.max_gap_norm
    return DiscoveryParams(depth, norm)


def _report_blockers(outcome: NoScheme, args) -> None:
    if args.json:
        _emit(args, {"status": "no_scheme", **outcome.to_dict()})
        return
    print(f"{BOLD}{Fore.RED}No scheme{RESET} for {format_pattern_set(outcome.patterns)} "
          f"at depth {outcome.params.max_depth}, gap norm {outcome.params.max_gap_norm}")
    for prefix in outcome.blocking:
        print(f"  {Fore.YELLOW}blocking:{RESET} {''.join(str(x) for x in prefix)}")


def _scheme_for(args, settings) -> Scheme:
    """Load ``--scheme`` or discover one for the positional patterns."""
    if getattr(args, "scheme", None):
        return load_scheme(args.scheme)
    if not args.patterns:
        raise PatternError("Give a pattern set or --scheme FILE")
    patterns = parse_pattern_set(args.patterns)
    outcome, _ = discover_with_symmetry(patterns, _params(args, settings), args.try_reverse)
    if isinstance(outcome, NoScheme):
        _report_blockers(outcome, args)
        raise CommandFailed(EXIT_NO_SCHEME, "no_scheme")
    return outcome


def _shift_positionals(args) -> None:
    """With --scheme the first positional is N, not a pattern set."""
    if getattr(args, "scheme", None) and args.patterns and args.patterns.isdigit() and args.n_pos is None:
        args.n_pos, args.patterns = int(args.patterns), None


def _n_max(args, default: int) -> int:
    n = args.n if args.n is not None else args.n_pos
    return default if n is None else n


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_discover(args, settings) -> str:
    patterns = parse_pattern_set(args.patterns)
    params = _params(args, settings)
    outcome, variant = discover_with_symmetry(patterns, params, args.try_reverse)
    if isinstance(outcome, NoScheme):
        _report_blockers(outcome, args)
        raise CommandFailed(EXIT_NO_SCHEME, "no_scheme")
    if args.out:
        result = save_scheme(args.out, outcome, create_backup=args.backup)
        if not result.success:
            raise FileOpError(result.error, filepath=args.out)
    if args.json:
        _emit(args, {"status": "scheme", "variant": variant, "scheme": outcome.to_dict()})
    else:
        print(f"{BOLD}{Fore.GREEN}Scheme found{RESET} for {format_pattern_set(patterns)} "
              f"({len(outcome)} triples, depth {outcome.depth}, variant {variant})")
        for triple in outcome.sorted_triples():
            word = "".join(str(x) for x in triple.prefix) or "ε"
            print(f"  {Fore.WHITE}{word:<8}{RESET} G={triple.gap_basis.to_list()}  R={list(triple.rd_set)}")
        if args.out:
            print(f"  {Style.DIM}Written -> {args.out}{RESET}")
            if result.metadata.get("backup_created"):
                print(f"  {Style.DIM}Previous file kept at {result.metadata['backup_path']}{RESET}")
    return f"scheme depth {outcome.depth} ({variant})"


def cmd_enumerate(args, settings) -> str:
    scheme = _scheme_for(args, settings)
    n_max = _n_max(args, 10)
    evaluator = SchemeEvaluator(scheme)
    # q-output is always the JSON array of rows n = 1.., coefficients by ascending k
    if args.by_inversions:
        print(json.dumps(evaluator.triangle(n_max)))
        return f"triangle n<={n_max}"
    values = evaluator.sequence(n_max).values
    if args.json:
        print(json.dumps(values))
    else:
        print("\n".join(str(v) for v in values))
    return f"sequence n<={n_max}"


def cmd_oracle_check(args, settings) -> str:
    scheme = _scheme_for(args, settings)
    limit = args.oracle_limit if args.oracle_limit is not None else settings.oracle_limit
    n_max = _n_max(args, min(8, limit))
    if n_max > limit:
        raise OracleLimitError(f"n={n_max} exceeds the oracle limit {limit}", n=n_max, limit=limit)
    evaluator = SchemeEvaluator(scheme)
    rows = []
    first_mismatch = None
    for n in range(1, n_max + 1):
        expected = brute_count(scheme.patterns, n, limit=limit)
        actual = evaluator.count(n)
        ok = expected == actual
        if args.by_inversions and ok:
            reference = brute_count_by_inversions(scheme.patterns, n, limit=limit)
            if scheme.variant == "reverse":
                reference = reference.reflected(n * (n - 1) // 2)
            ok = reference == evaluator.count_by_inversions(n)
        rows.append({"n": n, "scheme": actual, "oracle": expected, "pass": ok})
        if not ok and first_mismatch is None:
            first_mismatch = n
        if not args.json:
            mark = f"{Fore.GREEN}pass{RESET}" if ok else f"{Fore.RED}FAIL{RESET}"
            print(f"  n={n:<3} scheme={actual:<10} oracle={expected:<10} {mark}")
    _emit(args, {"patterns": [str(p) for p in scheme.patterns], "rows": rows,
                 "first_mismatch": first_mismatch})
    if first_mismatch is not None:
        if not args.json:
            print(f"{BOLD}{Fore.RED}Mismatch{RESET} first at n={first_mismatch}")
        raise CommandFailed(EXIT_MISMATCH, f"mismatch at n={first_mismatch}")
    return f"pass n<={n_max}"


def _int_tuple(text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.replace("{", "").replace("}", "").split(",") if part.strip())
    except ValueError:
        raise PatternError(f"Expected comma-separated integers, got '{text}'") from None


def cmd_survey(args, settings) -> str:
    report = run_survey(
        length=args.length,
        set_type=_int_tuple(args.set_type),
        params=_params(args, settings),
        block_type=_int_tuple(args.block_type),
        allow_slow=args.slow,
        budget=settings.survey_budget,
        workers=args.workers,
    )
    if args.json:
        _emit(args, report.to_dict())
    else:
        print(report.summary().to_string(index=False))
        print(f"\n  {BOLD}{report.classes_successful}/{report.classes_total}{RESET} classes have a scheme")
    return f"{report.classes_successful}/{report.classes_total} classes"


def cmd_classify(args, settings) -> str:
    pattern_sets = [parse_pattern_set(text) for text in args.pattern_sets]
    n_max = args.n if args.n is not None else settings.classify_n
    report = classify(pattern_sets, n_max, _params(args, settings))
    if args.json:
        _emit(args, report.to_dict())
    else:
        for index, group in enumerate(report.groups):
            print(f"  {Fore.CYAN}group {index}{RESET}: {' | '.join(group)}")
            print(f"    {Style.DIM}{', '.join(str(v) for v in report.sequences[index])}{RESET}")
        for (i, j), n in sorted(report.witnesses.items()):
            print(f"  groups {i} and {j} differ first at n={n}")
        for key in report.unclassifiable:
            print(f"  {Fore.YELLOW}unclassifiable:{RESET} {key}")
    return f"{len(report.groups)} groups"


COMMANDS = {
    "discover": (cmd_discover, ActionType.DISCOVERY),
    "enumerate": (cmd_enumerate, ActionType.ENUMERATION),
    "oracle-check": (cmd_oracle_check, ActionType.ORACLE_CHECK),
    "survey": (cmd_survey, ActionType.SURVEY),
    "classify": (cmd_classify, ActionType.CLASSIFY),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Enumeration schemes for vincular pattern avoidance")
    sub = parser.add_subparsers(dest="command", required=True)

    def bounds(p):
        p.add_argument("--depth", "-d", type=int, default=None, help="Maximum prefix length")
        p.add_argument("--max-gap-norm", "-M", type=int, default=None, help="Gap vector norm bound")
        p.add_argument("--json", action="store_true", help="Emit a single JSON document")

    p = sub.add_parser("discover", help="Search for an enumeration scheme")
    p.add_argument("patterns", help='Pattern set such as "23-1" or "3-21, 32-1"')
    p.add_argument("--out", default=None, help="Write the scheme document here")
    p.add_argument("--backup", action="store_true", help="Keep a timestamped copy of an overwritten --out file")
    p.add_argument("--try-reverse", action="store_true", help="Fall back to the reversed set")
    bounds(p)

    for name in ("enumerate", "oracle-check"):
        p = sub.add_parser(name)
        p.add_argument("patterns", nargs="?", default=None)
        p.add_argument("n_pos", nargs="?", type=int, default=None, metavar="N")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--scheme", default=None, help="Use a saved scheme document")
        p.add_argument("--by-inversions", action="store_true", help="Print the q-triangle as a JSON array of rows")
        p.add_argument("--try-reverse", action=argparse.BooleanOptionalAction, default=True,
                       help="Fall back to the reversed set (on by default)")
        if name == "oracle-check":
            p.add_argument("--oracle-limit", type=int, default=None)
        bounds(p)

    p = sub.add_parser("survey", help="Run discovery once per symmetry class")
    p.add_argument("--length", type=int, default=None)
    p.add_argument("--set-type", default=None, help='Multiset of lengths such as "2,3"')
    p.add_argument("--block-type", default=None, help='With --length, e.g. "2,2"')
    p.add_argument("--slow", action="store_true", help="Allow surveys above the budget")
    p.add_argument("--workers", type=int, default=1)
    bounds(p)

    p = sub.add_parser("classify", help="Group pattern sets by count sequence")
    p.add_argument("pattern_sets", nargs="+")
    p.add_argument("--n", type=int, default=None)
    bounds(p)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    colorama_init()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = load_settings(use_dotenv=False)
    except ConfigError as e:
        print(f"{BOLD}{Fore.RED}ERROR:{RESET} {e.message}")
        return EXIT_USAGE

    handler, action = COMMANDS[args.command]
    if args.command == "survey":
        pattern_text = f"length={args.length}" if args.length is not None else f"set_type={args.set_type}"
    elif args.command == "classify":
        pattern_text = args.pattern_sets
    else:
        _shift_positionals(args)
        pattern_text = args.patterns or getattr(args, "scheme", None)

    status, code = "SUCCESS", EXIT_OK
    try:
        outcome = handler(args, settings)
    except CommandFailed as e:
        status, code, outcome = "FAILURE", e.code, e.outcome
    except (PatternError, SchemeError, FileOpError, OracleLimitError, SurveyBudgetError) as e:
        print(f"{BOLD}{Fore.RED}ERROR:{RESET} {e.message}", file=sys.stderr)
        status, code, outcome = "FAILURE", EXIT_USAGE, type(e).__name__

    log_run(
        f"cli.{args.command}",
        action,
        {"patterns": pattern_text, "outcome": outcome},
        status,
        log_file=settings.log_file,
    )
    return code


if __name__ == "__main__":
    sys.exit(main())
