"""Command line interface: ``kneser-dist <command> [options]``.

Exit codes: 0 success or verified, 1 usage error, 2 verified negative,
3 trial budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fixation_bounds as fb
from .constructive_small import as_edge_lists, construct
from .dyadic import decimal_string
from .kneser_graph import KN_EDGES, KNESER_VERTICES, ColorableObjectSet
from .list_distinguish import (
    COLORING_CAP,
    DEFAULT_MAX_TRIALS,
    VERIFY_CAP,
    Coloring,
    ListAssignment,
    brute_force_distinguishing_number,
    conjecture_explore,
    exact_list_distinguishable,
    is_distinguishing,
    las_vegas_distinguish,
    random_assignment,
)

EXIT_OK, EXIT_USAGE, EXIT_NEGATIVE, EXIT_EXHAUSTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    r: int | None = None
    k: int | None = None
    seed: int = 0
    input_path: str | None = None
    output_path: str | None = None
    format: str = "json"
    cap_perms: int = VERIFY_CAP
    cap_colorings: int = COLORING_CAP

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            command=args.command,
            n=getattr(args, "n", None),
            r=getattr(args, "r", None),
            k=getattr(args, "k", None),
            seed=getattr(args, "seed", 0),
            input_path=getattr(args, "input", None),
            output_path=args.out,
            format=args.format,
            cap_perms=args.cap_perms,
            cap_colorings=args.cap_colorings,
        )


def _emit(cfg: RunConfig, payload, csv_text: str | None = None):
    if cfg.format == "csv":
        if csv_text is None:
            raise UsageError(f"--format csv is not available for `{cfg.command}`")
        text = csv_text
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        sys.stdout.write(text)


def _load_lists(args) -> ListAssignment:
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text())
            return ListAssignment.from_json(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read list assignment {args.input}: {exc}") from None
    if args.identical and args.n and args.r:
        kind = KN_EDGES if args.r == 2 else KNESER_VERTICES
        return ListAssignment.identical(ColorableObjectSet(kind, args.n, args.r), args.identical.split(","))
    raise UsageError("give --input FILE, or --n, --r and --identical a,b")


# -- commands ------------------------------------------------------------------------


def cmd_bounds(args, cfg: RunConfig) -> int:
    n_lo = args.n
    n_hi = args.n_max or args.n
    if n_hi < n_lo:
        raise UsageError("--n-max must be >= --n")
    if n_hi > args.cap_n:
        raise UsageError(f"n up to {n_hi} exceeds --cap-n {args.cap_n}")
    if args.kneser_r is not None:
        rows = []
        for n in range(n_lo, n_hi + 1):
            try:
                row = {"kneser_orbit_bound": fb.kneser_orbit_bound(n, args.kneser_r).to_json()}
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            if args.kneser_r == 3 and n in fb.REFERENCE_CATEGORY_COUNTS:
                row["category_split"] = fb.category_split(n, 3).to_json()
            rows.append(row)
        _emit(cfg, {"kneser": rows})
        return EXIT_OK
    if n_lo < 2:
        raise UsageError("n must be >= 2")
    i = args.min_cycle
    if i < 1 or i > n_lo:
        raise UsageError("--min-cycle must be between 1 and n")
    out, csv_parts = [], []
    for n in range(n_lo, n_hi + 1):
        report = fb.f_min_sum(n, i, args.cap_n)
        row = {"report": report.to_json(), "full_cycle": {"P": str(fb.p_full_cycle(n)), "decimal": decimal_string(fb.p_full_cycle(n))}}
        if i == 1 and n >= 9:
            row["recursion"] = fb.recursion_rhs(n, args.cap_n).to_json()
        if i == 1 and n >= 8:
            row["decay"] = fb.decay_bound_check(n, n, args.cap_n)[0].to_json()
        out.append(row)
        csv_parts.append(report.to_csv() if not csv_parts else report.to_csv().split("\n", 1)[1])
    _emit(cfg, {"bounds": out}, "".join(csv_parts) if n_lo == n_hi else None)
    return EXIT_OK


def cmd_construct(args, cfg: RunConfig) -> int:
    L = _load_lists(args)
    if L.r != 2 or L.n not in (6, 7):
        raise UsageError(f"`construct` covers K(6,2) and K(7,2) only (got n={L.n}, r={L.r}); use `sample`")
    if L.uniform_size() != 2:
        raise UsageError("`construct` needs uniform 2-lists")
    result = construct(as_edge_lists(L), seed=args.seed, max_trials=args.max_trials)
    payload = result.to_json()
    payload["objects"] = L.object_set.kind
    _emit(cfg, payload)
    return EXIT_OK


def cmd_sample(args, cfg: RunConfig) -> int:
    L = _load_lists(args)
    if L.n > args.cap_perms:
        raise UsageError(f"n={L.n} exceeds --cap-perms {args.cap_perms}")
    result = las_vegas_distinguish(L, args.max_trials, args.seed, cap=args.cap_perms)
    _emit(cfg, result.to_json())
    return EXIT_OK if result.success else EXIT_EXHAUSTED


def cmd_dnumber(args, cfg: RunConfig) -> int:
    try:
        d = brute_force_distinguishing_number(
            args.n, args.r, args.k, seed=args.seed, cap_colorings=args.cap_colorings, cap=args.cap_perms
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(cfg, {"n": args.n, "r": args.r, "k_max": args.k, "D": d if d is not None else f">{args.k}"})
    return EXIT_OK if d is not None else EXIT_NEGATIVE


def cmd_conjecture(args, cfg: RunConfig) -> int:
    kind = KN_EDGES if args.r == 2 else KNESER_VERTICES
    objs = ColorableObjectSet(kind, args.n, args.r)
    palette = args.palette or 2 * args.k
    samples = [random_assignment(objs, args.k, palette, args.seed + i) for i in range(args.samples)]
    report = conjecture_explore(args.n, args.r, args.k, samples, cap_colorings=args.cap_colorings)
    _emit(cfg, report.to_json())
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    try:
        c = Coloring.from_json(json.loads(Path(args.input).read_text()))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read colouring {args.input}: {exc}") from None
    try:
        cert = is_distinguishing(c, cap=args.cap_perms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(cfg, cert.to_json())
    return EXIT_OK if cert.verdict else EXIT_NEGATIVE


def cmd_oracle(args, cfg: RunConfig) -> int:
    L = _load_lists(args)
    try:
        ok, c = exact_list_distinguishable(L, cap_colorings=args.cap_colorings, cap=args.cap_perms)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"list_distinguishable": ok, "coloring": None if c is None else c.to_json()}
    _emit(cfg, payload)
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- parser -------------------------------------------------------------------------------


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap-perms", type=int, default=VERIFY_CAP, help="largest n verified over all of S_n")
    p.add_argument("--cap-colorings", type=int, default=COLORING_CAP, help="largest colouring space enumerated")


def _list_input(p: argparse.ArgumentParser):
    p.add_argument("--input", metavar="PATH", help="ListAssignment JSON")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--identical", metavar="COLORS", help="comma-separated colours for identical lists")
    p.add_argument("--max-trials", type=int, default=DEFAULT_MAX_TRIALS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneser-dist", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="exact f(n), f_{>=i}(n), P(n), recursion and decay checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--min-cycle", type=int, default=1)
    p.add_argument("--kneser-r", type=int)
    p.add_argument("--cap-n", type=int, default=fb.DEFAULT_N_CAP)
    _common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="deterministic colouring for K(6,2) / K(7,2) 2-lists")
    _list_input(p)
    _common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sample", help="Las Vegas random list colouring, verified over S_n")
    _list_input(p)
    _common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("dnumber", help="brute-force distinguishing number of K(n, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="largest k tried")
    _common(p)
    p.set_defaults(func=cmd_dnumber)

    p = sub.add_parser("conjecture", help="sampled comparison of list assignments against identical lists")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--palette", type=int, help="palette size for random lists (default 2k)")
    _common(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="check a colouring against all of S_n")
    p.add_argument("--input", metavar="PATH", required=True, help="Coloring JSON")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive list-distinguishability check")
    _list_input(p)
    _common(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    cfg = RunConfig.from_args(args)
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
