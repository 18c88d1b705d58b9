"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.

Flavors of the J-braid and necklace families:
  full      all generators (both core circles present)
  internal  z killed (the circle around the internal core is kept, carried by y)
  external  y killed (the circle around the external core is kept, carried by z)
  plain     y and z killed (the bare torus link)
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import isomaps
from .garside import CircularParams, ResourceLimitError, ball_word, circular_group, positive_ball
from .presentations import (
    BUILTINS,
    FLAVORS,
    FinitePresentation,
    LimitExceeded,
    PresentationError,
    abelianization,
    builtin,
    coset_enumeration,
    simplify,
)
from .words import Word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

# short tokens accepted on the command line for the longer family and check names
FAMILY_ALIASES = {"cor526": "core_quotient"}
CHECK_ALIASES = {"thm47": "pipeline", "thm57": "core", "conj56": "torus_link_map"}
ALL_CHECKS = ("phi", "roundtrip", "special", "pipeline", "core")


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None) -> None:
    if fmt == "json" or text is None:
        print(json.dumps(obj, indent=2))
    else:
        print(text)


def _family_params(args) -> dict:
    family = FAMILY_ALIASES.get(args.family, args.family)
    need = {
        "circular": ("n", "m"),
        "jbraid": ("n", "m"),
        "jreflection": ("k", "b", "n", "c", "m"),
        "torusknot": ("n", "m"),
        "toruslink": ("n", "m"),
        "necklace": ("n", "m"),
        "keychain": ("k",),
        "core_quotient": ("n", "m"),
        "necklace_two_cores": ("n", "m"),
        "necklace_one_core": ("n", "m"),
        "necklace_braid_form": ("n", "m"),
        "necklace_twisted_form": ("n", "m"),
        "necklace_pairs": ("n", "m"),
    }[family]
    params = {}
    for key in need:
        value = getattr(args, key)
        if value is None:
            raise UsageError(f"{args.family} needs --{key}")
        params[key] = value
    if family in ("jbraid", "necklace"):
        params["flavor"] = args.flavor
    if family in ("jbraid", "necklace_two_cores", "necklace_one_core"):
        params["force"] = args.force
    if family == "necklace_pairs":
        params["pairs"] = args.pairs
    return params


def cmd_present(args) -> int:
    family = FAMILY_ALIASES.get(args.family, args.family)
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        p = builtin(family, **_family_params(args))
    if args.simplified:
        p = simplify(p)
    _emit(p.to_json(), args.format, str(p))
    return EXIT_OK


def cmd_nf(args) -> int:
    group = circular_group(CircularParams(args.n, args.m))
    nf = group.normal_form(Word.parse(args.word))
    _emit({"n": args.n, "m": args.m, "word": args.word, "normal_form": str(nf)}, args.format, str(nf))
    return EXIT_OK


def _run_check(task: tuple[str, int, int]) -> dict:
    name, n, m = task
    return isomaps.CHECKS[name](n, m).to_json()


def cmd_verify(args) -> int:
    check = CHECK_ALIASES.get(args.check, args.check)
    if check == "all":
        cells = [(c, n, m) for c in ALL_CHECKS for n in range(1, args.max + 1) for m in range(1, args.max + 1)]
    else:
        if check not in isomaps.CHECKS:
            raise UsageError(f"unknown check {args.check!r}")
        if args.n is None or args.m is None:
            raise UsageError("verify needs --n and --m (or use 'all --max N')")
        cells = [(check, args.n, args.m)]
    if args.jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_check, cells))
    else:
        reports = [_run_check(cell) for cell in cells]
    ok = all(item["status"] in ("pass", "vacuous") for r in reports for item in r["items"])
    if args.format == "json":
        print(json.dumps(reports[0] if len(reports) == 1 and check != "all" else reports, indent=2))
    else:
        for r in reports:
            bad = [i for i in r["items"] if i["status"] == "fail"]
            print(f"{r['check']} ({r['n']},{r['m']}): {'pass' if not bad else 'FAIL'}")
            for item in bad:
                print(f"  {item['name']}: {item['witness']}")
    return EXIT_OK if ok else EXIT_FAIL


def _read_presentation(path: str | None) -> FinitePresentation:
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    try:
        return FinitePresentation.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def cmd_abelianize(args) -> int:
    p = _read_presentation(args.file)
    rank, torsion = abelianization(p)
    text = f"Z^{rank}" + "".join(f" x Z/{t}" for t in torsion)
    _emit({"free_rank": rank, "torsion": torsion}, args.format, text)
    return EXIT_OK


def cmd_coset(args) -> int:
    p = _read_presentation(args.file)
    try:
        order = coset_enumeration(p, args.limit)
    except LimitExceeded:
        _emit({"limit_exceeded": args.limit}, args.format, f"limit exceeded ({args.limit} cosets)")
        return EXIT_LIMIT
    _emit({"order": order}, args.format, f"order {order}")
    return EXIT_OK


def cmd_ball(args) -> int:
    params = CircularParams(args.n, args.m)
    classes = positive_ball(params, args.len, args.limit)
    reps = [str(ball_word(params, c[0])) for c in classes]
    _emit({"n": args.n, "m": args.m, "len": args.len, "classes": len(classes), "representatives": reps},
          args.format, f"{len(classes)} classes\n" + "\n".join(reps))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torusnecklace", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="json"):
        p.add_argument("--format", choices=("text", "json"), default=default)

    families = sorted(set(BUILTINS) | set(FAMILY_ALIASES))
    p = sub.add_parser("present", help="emit a built-in presentation")
    p.add_argument("family", choices=families)
    for key in ("n", "m", "k", "b", "c"):
        p.add_argument(f"--{key}", type=int)
    p.add_argument("--flavor", choices=FLAVORS, default="full")
    p.add_argument("--pairs", choices=("all", "chain"), default="all")
    p.add_argument("--force", action="store_true", help="build flavors outside their usual parameter range (warns)")
    p.add_argument("--simplified", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("nf", help="Garside normal form of a word in G(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--word", required=True)
    fmt(p, "text")
    p.set_defaults(func=cmd_nf)

    checks = sorted(set(isomaps.CHECKS) | set(CHECK_ALIASES) | {"all"})
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("check", choices=checks)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--max", type=int, default=5, help="parameter range for 'all'")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for 'all'")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("abelianize", help="abelianization of a presentation document")
    p.add_argument("file", nargs="?")
    fmt(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("coset", help="group order by coset enumeration")
    p.add_argument("file", nargs="?")
    p.add_argument("--limit", type=int, default=10_000, help="maximum number of cosets")
    fmt(p)
    p.set_defaults(func=cmd_coset)

    p = sub.add_parser("ball", help="equality classes of short positive words in G(n, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--limit", type=int, default=2_000_000, help="maximum number of words")
    fmt(p)
    p.set_defaults(func=cmd_ball)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ResourceLimitError, LimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, PresentationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
