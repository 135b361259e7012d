"""Command-line front end: ``fll <subcommand> ...``.

Exit codes: 0 success (documented deltas count as success), 1 a verification
check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import anticodes as ac
from . import codes as cd
from .average import expectation_report
from .balls import fll_ball
from .errors import CapacityError, FLLError
from .extremal import (
    balanced_word,
    exhaustive_extremes,
    max_ball_size_binary,
    max_ball_size_nonbinary,
    max_center_nonbinary,
    min_ball_size,
)
from .lcs import compare
from .report import FORMATS, emit_report
from .spheres import SphereSpec, del_ins_sphere
from .suites import SUITES, run_suite
from .sweep import DEFAULT_MAX_SPACE
from .words import Word, parse_word


def _add_common(p: argparse.ArgumentParser, suppress: bool = False) -> None:
    # global flags may sit before or after the subcommand; the subcommand copy
    # only overrides when given
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--m", type=int, default=default(2), help="alphabet size (default 2)")
    p.add_argument("--n", type=int, default=default(None), help="word length")
    p.add_argument("--seed", type=int, default=default(0))
    p.add_argument("--workers", type=int, default=default(1))
    p.add_argument("--max-space", type=int, default=default(DEFAULT_MAX_SPACE),
                   help="largest word space m^n to enumerate (default 2^24)")
    p.add_argument("--format", choices=FORMATS, default=default("text"))
    p.add_argument("--out", type=Path, default=default(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    parser = argparse.ArgumentParser(prog="fll", description="Fixed Length Levenshtein metric toolkit")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", parents=[common], help="llcs and FLL distance of two words")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("ball", parents=[common], help="FLL ball around a word")
    p.add_argument("--center", required=True)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--enumerate", action="store_true", help="print the members")
    p.add_argument("--method", choices=("filter", "bfs"), default="filter")

    p = sub.add_parser("sphere", parents=[common], help="deletion-insertion sphere around a word")
    p.add_argument("--center", required=True)
    p.add_argument("--t-del", type=int, default=0)
    p.add_argument("--t-ins", type=int, default=0)
    p.add_argument("--insertions-first", action="store_true")

    p = sub.add_parser("extremes", parents=[common], help="minimum and maximum radius-one balls")
    p.add_argument("--exhaustive", action="store_true", help="confirm by enumerating Z_m^n")

    sub.add_parser("average", parents=[common], help="expected statistics, closed form vs enumeration")

    p = sub.add_parser("anticodes", parents=[common], help="maximal binary anticodes")
    p.add_argument("--t", type=int, default=1, help="diameter")
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("check-code", parents=[common], help="code predicates for a code file")
    p.add_argument("--file", type=Path, required=True)
    p.add_argument("--t-del", type=int, default=1)
    p.add_argument("--t-ins", type=int, default=0)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="extra integer suite parameter, repeatable")
    return parser


def _need_n(args) -> int:
    if args.n is None:
        raise FLLError(f"{args.command} needs --n")
    return args.n


def _render(args, doc: dict, lines: list[str]) -> bytes:
    if args.format == "json":
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    return ("\n".join(lines) + "\n").encode()


def cmd_dist(args) -> bytes:
    x, y = parse_word(args.x, args.m), parse_word(args.y, args.m)
    r = compare(x, y)
    return _render(args, {"x": str(x), "y": str(y), "n": r.n, "llcs": r.llcs, "distance": r.distance},
                   [f"llcs={r.llcs} distance={r.distance}"])


def cmd_ball(args) -> bytes:
    x = parse_word(args.center, args.m)
    ball = fll_ball(x, args.radius, method=args.method, max_space=args.max_space,
                    enumerate_members=args.enumerate)
    members = [str(w) for w in ball.members] if ball.members is not None else None
    lines = list(members or []) + [f"size: {ball.size}"]
    doc = {"center": str(x), "m": args.m, "radius": args.radius, "size": ball.size}
    if members is not None:
        doc["members"] = members
    return _render(args, doc, lines)


def cmd_sphere(args) -> bytes:
    x = parse_word(args.center, args.m)
    ws = del_ins_sphere(x, SphereSpec(args.t_del, args.t_ins), insertions_first=args.insertions_first)
    words = [str(w) for w in ws]
    return _render(args, {"center": str(x), "t_del": args.t_del, "t_ins": args.t_ins,
                          "words": words, "size": len(words)},
                   words + [f"size: {len(words)}"])


def cmd_extremes(args) -> bytes:
    n, m = _need_n(args), args.m
    doc: dict = {"n": n, "m": m}
    if n > 1:
        doc["min"] = min_ball_size(n, m, 1)
    doc["min_centers"] = [str(Word.constant(s, n, m)) for s in range(m)]
    if m == 2:
        best = max_ball_size_binary(n, with_centers=True)
        doc["max"] = best.value
        doc["selector"] = sorted(best.alpha_set)
        doc["max_centers"] = sorted(str(w) for w in best.argmax_set)
        doc["canonical_center"] = str(balanced_word(n, min(best.alpha_set)))
    else:
        doc["max"] = max_ball_size_nonbinary(n, m)
        doc["canonical_center"] = str(max_center_nonbinary(n, m))
    if args.exhaustive:
        ex = exhaustive_extremes(n, m, args.workers, args.max_space)
        doc["exhaustive"] = {
            "min": ex.min_value,
            "max": ex.max_value,
            "min_confirmed": ex.min_value == doc.get("min", ex.min_value),
            "max_confirmed": ex.max_value == doc["max"],
        }
    lines = [f"{k}: {v}" for k, v in doc.items()]
    return _render(args, doc, lines)


def cmd_average(args) -> bytes:
    report = expectation_report(_need_n(args), args.m, args.workers, args.max_space)
    return (json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n").encode()


def cmd_anticodes(args) -> bytes:
    found = ac.enumerate_maximal_anticodes(_need_n(args), args.m, args.t, args.workers)
    sizes = [len(a) for a in found]
    doc = {"n": args.n, "m": args.m, "t": args.t, "max": max(sizes), "min": min(sizes), "count": len(found)}
    lines = [f"max={doc['max']} min={doc['min']} count={doc['count']}"]
    if args.list:
        doc["anticodes"] = [str(a) for a in found]
        lines += doc["anticodes"]
    return _render(args, doc, lines)


def cmd_check_code(args) -> bytes:
    code = cd.read_code_file(args.file)
    total = args.t_del + args.t_ins
    doc = {
        "n": code.n, "m": code.m, "size": len(code), "t_del": args.t_del, "t_ins": args.t_ins,
        "del_ins_correcting": cd.is_del_ins_correcting(code, args.t_del, args.t_ins),
        "deletion_correcting": cd.is_t_deletion_correcting(code, total),
        "insertion_correcting": cd.is_t_insertion_correcting(code, total),
    }
    if len(code) > 1:
        doc["min_fll_distance"] = cd.min_fll_distance(code)
        pair = cd.first_violating_pair(code, total)
        doc["first_violating_pair"] = [str(w) for w in pair] if pair else None
    return _render(args, doc, [f"{k}: {v}" for k, v in doc.items()])


def _verify_params(args) -> dict:
    params: dict = {"m": args.m}
    if args.n is not None:
        params["n_min"] = params["n_max"] = args.n
    for key in ("n_min", "n_max", "t", "trials"):
        if getattr(args, key) is not None:
            params[key] = getattr(args, key)
    if args.suite == "codes":
        params["seed"] = args.seed
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep:
            raise FLLError(f"--param expects KEY=VALUE, got {item!r}")
        params[key.replace("-", "_")] = int(value)
    return params


COMMANDS = {
    "dist": cmd_dist,
    "ball": cmd_ball,
    "sphere": cmd_sphere,
    "extremes": cmd_extremes,
    "average": cmd_average,
    "anticodes": cmd_anticodes,
    "check-code": cmd_check_code,
}


def _write(args, data: bytes) -> None:
    if args.out:
        args.out.write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_suite(args.suite, _verify_params(args), args.workers, args.max_space)
            _write(args, emit_report(report, args.format))
            return report.exit_code
        _write(args, COMMANDS[args.command](args))
        return 0
    except CapacityError as exc:
        print(f"fll: capacity exceeded: {exc}", file=sys.stderr)
        return 2
    except (FLLError, OSError, ValueError) as exc:
        print(f"fll: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
