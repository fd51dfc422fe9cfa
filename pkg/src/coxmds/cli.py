"""Command-line front end.

Subcommands:

* ``run <script> [--param name=value]... [--no-fan]`` — execute a session
  script and write its report to stdout.
* ``verify [corpusDir] [--filter glob] [--jobs n] [--tier n]`` — run golden
  cases and compare against their expected outcomes.
* ``info <case>`` — show a golden case's metadata without running it.
* ``audit [corpusDir]`` — check the golden corpus for duplicate ids and for
  completeness against the built-in manifest.

Exit codes: 0 success, 1 failed assertion or failed verification, 2 parse
error, 3 internal error.  Environment: ``COXMDS_VERBOSE`` (nonzero prints
tracebacks for internal errors), ``COXMDS_JOBS`` (default worker count for
``verify``).
"""

from __future__ import annotations

import argparse
import fnmatch
import os
import sys
import time
import traceback
from fractions import Fraction
from pathlib import Path

from .session import (
    AssertionFailure,
    SessionParseError,
    check_case,
    load_case,
    load_script,
    run_script,
)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3

ENV_VERBOSE = "COXMDS_VERBOSE"
ENV_JOBS = "COXMDS_JOBS"

# Completeness manifest: ids that must appear exactly once in the corpus.
REQUIRED_CASES = (
    "surface/E6-cubic",
    "surface/A4-resolution",
    "surface/A4-two-points",
    "surface/dP4-five-points",
    "cubic/A1",
    "cubic/2A1",
    "cubic/A2",
    "cubic/3A1",
    "cubic/4A1",
    "cubic/A2A1",
    "cubic/A3",
    "cubic/A22A1",
    "cubic/A3A1",
    "cubic/2A2",
    "cubic/A4",
    "cubic/A5",
    "implicit/A2A1",
    "implicit/A3",
    "implicit/A22A1",
    "implicit/A3A1",
    "implicit/2A2",
    "implicit/A4",
    "implicit/A5",
    "fano1/deg8-index2",
    "fano1/deg6-index1",
    "fano1/deg4-index1",
    "fano1/deg2-index1",
    "fano2/2",
    "fano2/18",
    "fano2/27",
    "fano2/22",
    "fano2/19",
    "fano2/4",
)


def _verbose() -> int:
    try:
        return int(os.environ.get(ENV_VERBOSE, "0") or "0")
    except ValueError:
        return 0


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(ENV_JOBS, "1") or "1"))
    except ValueError:
        return 1


def builtin_corpus() -> Path:
    """Directory of the golden cases shipped with the package."""
    return Path(__file__).resolve().parent / "cases"


def _discover(corpus_dir: str) -> list:
    root = Path(corpus_dir)
    if not root.is_dir():
        raise SessionParseError(f"corpus directory {corpus_dir!r} does not exist")
    return sorted(root.rglob("*.case"))


def _parse_param_arg(text: str) -> tuple:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise SessionParseError(f"--param expects name=value, got {text!r}")
    try:
        return name, Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise SessionParseError(f"--param {name}: {value!r} is not a rational")


def _cmd_run(args) -> int:
    script = load_script(args.script)
    overrides = dict(_parse_param_arg(p) for p in args.param or [])
    try:
        sess = run_script(script, overrides=overrides, no_fan=args.no_fan)
    except AssertionFailure as exc:
        for line in getattr(exc, "lines", []):
            print(line)
        print(f"assertion failed: {exc}")
        return EXIT_ASSERTION
    out = sess.report()
    if out:
        sys.stdout.write(out)
    return EXIT_OK


def _case_result(path: Path, tier: int, no_fan: bool) -> dict:
    """Run one golden case; never raises."""
    started = time.perf_counter()
    outcome = {"path": str(path), "id": None, "status": "PASS", "detail": ""}
    try:
        case = load_case(str(path))
        outcome["id"] = case.id
        if case.tier > tier:
            outcome["status"] = "SKIP"
            outcome["detail"] = f"tier {case.tier}"
        else:
            outcome["detail"] = check_case(case, no_fan=no_fan)
    except AssertionFailure as exc:
        outcome["status"] = "FAIL"
        outcome["detail"] = str(exc)
    except SessionParseError as exc:
        outcome["status"] = "PARSE"
        outcome["detail"] = str(exc)
    except Exception as exc:  # pragma: no cover - depends on corpus health
        outcome["status"] = "ERROR"
        outcome["detail"] = f"{type(exc).__name__}: {exc}"
        if _verbose():
            outcome["detail"] += "\n" + traceback.format_exc()
    outcome["seconds"] = time.perf_counter() - started
    return outcome


def _matches(case_id: str, pattern: str) -> bool:
    return fnmatch.fnmatchcase(case_id, pattern) or pattern in case_id


def _cmd_verify(args) -> int:
    paths = _discover(args.corpus)
    if args.filter:
        kept = []
        for path in paths:
            try:
                case = load_case(str(path))
            except SessionParseError:
                kept.append(path)  # surface the parse error in the run below
                continue
            if _matches(case.id, args.filter):
                kept.append(path)
        paths = kept
    if not paths:
        print("no cases selected")
        return EXIT_ASSERTION
    jobs = args.jobs or _default_jobs()
    work = [(path, args.tier, args.no_fan) for path in paths]
    if jobs > 1 and len(paths) > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.starmap(_case_result, work)
    else:
        results = [_case_result(*item) for item in work]
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0, "PARSE": 0, "ERROR": 0}
    for res in results:
        counts[res["status"]] += 1
        label = res["id"] or res["path"]
        if res["status"] == "SKIP":
            print(f"SKIP {label}: {res['detail']}")
        else:
            print(f"{res['status']} {label}: {res['detail']} ({res['seconds']:.2f}s)")
    print(
        f"passed {counts['PASS']}, failed {counts['FAIL'] + counts['ERROR']},"
        f" parse errors {counts['PARSE']}, skipped {counts['SKIP']}"
    )
    if counts["PARSE"]:
        return EXIT_PARSE
    if counts["ERROR"]:
        return EXIT_INTERNAL
    if counts["FAIL"]:
        return EXIT_ASSERTION
    return EXIT_OK


def _find_case(token: str) -> str:
    """Resolve a case path or a case id inside the built-in corpus."""
    if os.path.exists(token):
        return token
    for path in _discover(str(builtin_corpus())):
        try:
            case = load_case(str(path))
        except SessionParseError:
            continue
        if case.id == token:
            return str(path)
    raise SessionParseError(f"no case file or built-in case id {token!r}")


def _cmd_info(args) -> int:
    case = load_case(_find_case(args.case))
    print(f"id: {case.id}")
    print(f"source: {case.source}")
    print(f"tier: {case.tier}")
    if case.params:
        pairs = " ".join(f"{k}={v}" for k, v in sorted(case.params.items()))
        print(f"params: {pairs}")
    else:
        print("params: (none)")
    print(f"commands: {len(case.script.commands)}")
    print(f"result: {case.result}")
    expected = case.expected
    print(f"equivalence: {expected.get('equivalence', 'ideal-equality')}")
    if "relations" in expected:
        print(f"expected relations: {len(expected['relations'])}")
    if "nvars" in expected:
        print(f"expected variables: {expected['nvars']}")
    if "minimal_relations" in expected:
        print(f"expected minimal relations: {expected['minimal_relations']}")
    if "degree_matrix" in expected:
        rows = expected["degree_matrix"]
        cols = len(rows[0]) if rows else 0
        print(f"expected degree matrix: {len(rows)} x {cols}")
    if expected.get("torsion"):
        print(f"expected torsion orders: {' '.join(str(v) for v in expected['torsion'])}")
    return EXIT_OK


def _cmd_audit(args) -> int:
    paths = _discover(args.corpus)
    seen = {}
    problems = []
    for path in paths:
        try:
            case = load_case(str(path))
        except SessionParseError as exc:
            problems.append(f"parse error: {exc}")
            continue
        seen.setdefault(case.id, []).append(path)
    families = {}
    for case_id in seen:
        family = case_id.split("/", 1)[0]
        families[family] = families.get(family, 0) + 1
    for family in sorted(families):
        print(f"{family}: {families[family]} cases")
    print(f"total: {sum(families.values())} cases")
    for case_id, locations in sorted(seen.items()):
        if len(locations) > 1:
            problems.append(f"duplicate id {case_id!r} ({len(locations)} files)")
    for required in REQUIRED_CASES:
        if required not in seen:
            problems.append(f"missing required case {required!r}")
    if problems:
        for problem in problems:
            print(f"audit: {problem}")
        return EXIT_ASSERTION
    print("audit: complete, no duplicates")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxmds",
        description="Cox rings of Mori dream spaces via toric ambient modifications.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a session script")
    p_run.add_argument("script", help="path to a session script (JSON)")
    p_run.add_argument(
        "--param",
        action="append",
        metavar="NAME=VALUE",
        help="override a script parameter with a rational value",
    )
    p_run.add_argument(
        "--no-fan", action="store_true", help="ignore fan data in every command"
    )
    p_run.set_defaults(func=_cmd_run)

    p_verify = sub.add_parser("verify", help="run golden cases")
    p_verify.add_argument(
        "corpus",
        nargs="?",
        default=str(builtin_corpus()),
        help="corpus directory (default: the built-in cases)",
    )
    p_verify.add_argument("--filter", help="glob or substring on case ids")
    p_verify.add_argument("--jobs", type=int, help="worker processes")
    p_verify.add_argument(
        "--tier", type=int, default=1, help="run cases up to this tier (default 1)"
    )
    p_verify.add_argument(
        "--no-fan", action="store_true", help="ignore fan data in every command"
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_info = sub.add_parser("info", help="describe a golden case")
    p_info.add_argument("case", help="case file path or built-in case id")
    p_info.set_defaults(func=_cmd_info)

    p_audit = sub.add_parser("audit", help="check corpus completeness")
    p_audit.add_argument(
        "corpus",
        nargs="?",
        default=str(builtin_corpus()),
        help="corpus directory (default: the built-in cases)",
    )
    p_audit.set_defaults(func=_cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SessionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AssertionFailure as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERTION
    except Exception as exc:
        if _verbose():
            traceback.print_exc()
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
