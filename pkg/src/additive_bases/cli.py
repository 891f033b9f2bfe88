"""Command-line entry point: ``additive-bases <command> ...``.

Exit codes are part of the interface: 0 ok, 2 parse/usage, 3 overflow,
4 budget exceeded, 5 verification failure, 6 table mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .cache import ResultCache, canonical_json, make_key
from .config import DEFAULT_BUDGET, DEFAULT_DENSE_WIDTH_CAP, Budget, RunConfig, default_cache_dir
from .constructions import build_interval_2basis, verify_construction
from .errors import (
    BudgetExceededError,
    DomainError,
    IntegerOverflowError,
    VerificationError,
)
from .evidence import open_problem_report
from .extremal import ExtremalResult, k_dual, m_basis, m_sharp, n_basis, n_sharp
from .intset import IntSet, Interval
from .separation import check_bh, check_level, check_subset_sums, compare_modes
from .spectrum import Spectrum, spectrum_int, spectrum_nonneg, spectrum_sharp
from .sumset import profile
from .tables import PUBLISHED_TABLES, load_expected, regenerate_tables

EXIT_CODES = {
    "ok": 0,
    "parse": 2,
    "overflow": 3,
    "budget": 4,
    "verification": 5,
    "table_mismatch": 6,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["parse"], f"{self.prog}: error: {message}\n")


def _interval(text: str) -> Interval:
    try:
        lo, hi = (int(x) for x in text.strip("[]").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {text!r}")
    return Interval(lo, hi)


def _flatten(record, prefix=""):
    if isinstance(record, dict):
        for key in sorted(record):
            yield from _flatten(record[key], f"{prefix}{key}.")
    else:
        yield prefix.rstrip("."), record


def render(record, fmt: str, rows=None) -> str:
    """``json`` is canonical; ``csv`` and ``table`` are for humans and spreadsheets.

    ``rows`` (a list of flat dicts) overrides the default key/value layout.
    """
    if fmt == "json":
        return canonical_json(record)
    if rows is None:
        rows = [{"field": k, "value": json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else v}
                for k, v in _flatten(record)]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    cols = list(rows[0])
    cells = [["null" if r[c] is None else str(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _parse_set(text: str) -> IntSet:
    return IntSet.parse(text)


def _cache(args):
    if args.no_cache:
        return None
    return ResultCache(args.cache_dir)


def cmd_sumset(args, cfg) -> int:
    prof = profile(_parse_set(args.set), args.h, dense_width_cap=cfg.dense_width_cap)
    rec = prof.to_record()
    if args.command == "ell":
        rec = {"h": rec["h"], "set": rec["set"], "ell": rec["ell"], "ell_sharp": rec["ell_sharp"],
               "ell_sharp_witness": rec["ell_sharp_witness"]}
    print(render(rec, cfg.output_format), end="")
    return 0


def _spectrum_validator(rec: dict) -> bool:
    try:
        spec = Spectrum.from_record(rec)
    except (KeyError, ValueError, TypeError):
        return False
    return len(spec.values) > 0 and spec.values[0] >= 0


def cmd_spectrum(args, cfg) -> int:
    budget = Budget(cfg.budget)
    if args.sharp:
        bound = args.bound if args.bound is not None else 2 * args.h * args.k
        key = make_key("spectrum_sharp", h=args.h, k=args.k, bound=bound)
        kind, compute = "spectrum_sharp", lambda: spectrum_sharp(args.h, args.k, bound, budget)
    elif args.ground == "N0":
        key = make_key("spectrum_N0", h=args.h, k=args.k)
        kind, compute = "spectrum_N0", lambda: spectrum_nonneg(args.h, args.k, budget)
    else:
        window = args.window or Interval(-args.h * args.k, args.h * args.k)
        key = make_key("spectrum_Z", h=args.h, k=args.k, window=str(window))
        kind, compute = "spectrum_Z", lambda: spectrum_int(args.h, args.k, window, budget)
    cache = _cache(args)
    rec = cache.get(key, kind, args.h, args.k, _spectrum_validator) if cache else None
    code = 0
    if rec is None:
        try:
            spec = compute()
        except BudgetExceededError as exc:
            spec = exc.partial
            code = EXIT_CODES["budget"]
        rec = spec.to_record()
        if cache and code == 0:
            cache.put(key, kind, args.h, args.k, rec)
    spec = Spectrum.from_record(rec)
    out = dict(rec, compact=spec.compact())
    if cfg.output_format == "csv":
        rows = [{"h": spec.h, "k": spec.k, "value": v} for v in spec.values]
        print(render(out, "csv", rows), end="")
    else:
        print(render(out, cfg.output_format), end="")
    return code


def _extremal_validator(rec: dict) -> bool:
    try:
        return ExtremalResult.from_record(rec).revalidate()
    except (KeyError, ValueError, TypeError):
        return False


def cmd_extremal(args, cfg) -> int:
    budget = Budget(cfg.budget)
    kind = args.kind
    if kind == "k_dual":
        if args.n is None:
            raise DomainError("k_dual needs --n")
        size = args.n
        key = make_key(kind, h=args.h, n=args.n)
        compute = lambda: k_dual(args.h, args.n, budget)  # noqa: E731
    else:
        if args.k is None:
            raise DomainError(f"{kind} needs --k")
        size = args.k
        if kind == "n":
            key = make_key(kind, h=args.h, k=args.k)
            compute = lambda: n_basis(args.h, args.k, budget)  # noqa: E731
        elif kind == "m":
            window = args.window or Interval(-args.h * args.k, args.h * args.k)
            key = make_key(kind, h=args.h, k=args.k, window=str(window))
            compute = lambda: m_basis(args.h, args.k, window, budget)  # noqa: E731
        else:
            bound = args.max_element if args.max_element is not None else 2 * args.h * args.k
            key = make_key(kind, h=args.h, k=args.k, max_element=bound)
            fn = n_sharp if kind == "n_sharp" else m_sharp
            compute = lambda: fn(args.h, args.k, bound, budget)  # noqa: E731
    cache = _cache(args)
    rec = cache.get(key, kind, args.h, size, _extremal_validator) if cache else None
    if rec is None:
        rec = compute().to_record()
        if cache:
            cache.put(key, kind, args.h, size, rec)
    print(render(rec, cfg.output_format), end="")
    return 0


def _construction_record(A: IntSet, c: int, n: int, d: int, spec=None) -> dict:
    cert = verify_construction(A, c, n, d)
    rec = {"set": list(A), "c": c, "n": n, "d": d, "certificate": cert.to_record()}
    if spec is not None:
        rec["spec"] = spec.to_record()
    return rec


def cmd_construct(args, cfg) -> int:
    A, spec = build_interval_2basis(args.c, args.n, args.d)
    rec = _construction_record(A, args.c, args.n, args.d, spec)
    if args.out:
        Path(args.out).write_text(canonical_json(rec))
    print(render(rec, cfg.output_format), end="")
    return 0 if rec["certificate"]["all_pass"] else EXIT_CODES["verification"]


def cmd_verify(args, cfg) -> int:
    raw = json.loads(Path(args.file).read_text())
    A = IntSet(raw["set"])
    c, n, d = int(raw["c"]), int(raw["n"]), int(raw["d"])
    rec = _construction_record(A, c, n, d)
    problems = []
    if len(A) != 2 * n + 2:
        problems.append({"property": "size", "expected": 2 * n + 2, "got": len(A)})
    rec["certificate"]["counterexamples"] = problems + rec["certificate"]["counterexamples"]
    ok = rec["certificate"]["all_pass"] and not problems
    rec["verified"] = ok
    print(render(rec, cfg.output_format), end="")
    return 0 if ok else EXIT_CODES["verification"]


def cmd_separated(args, cfg) -> int:
    A = _parse_set(args.set)
    if args.compare:
        rec = compare_modes(A, args.level or 2, args.delta)
        print(render(rec, cfg.output_format), end="")
        return 0
    if args.subset_sums:
        report, mode = check_subset_sums(A, args.delta), {"mode": "SubsetSumLemma"}
    elif args.level is not None:
        report, mode = check_level(A, args.level, args.delta), {"mode": "MultisetLevel", "level": args.level}
    else:
        report, mode = check_bh(A, args.h, args.delta), {"mode": "Bh", "h": args.h}
    rec = dict(report.to_record(A), set=list(A), delta=args.delta, **mode)
    print(render(rec, cfg.output_format), end="")
    return 0


def cmd_tables(args, cfg) -> int:
    expected = load_expected(args.expected) if args.expected else PUBLISHED_TABLES
    results = regenerate_tables(args.h, expected, Budget(cfg.budget))
    matched = sum(r.match for r in results)
    summary = f"{matched}/{len(results)} tables match"
    if cfg.output_format == "json":
        print(render({"summary": summary, "tables": [r.to_record() for r in results]}, "json"), end="")
    else:
        rows = [{"h": r.h, "k": r.k, "match": r.match, "computed": r.computed, "expected": r.expected} for r in results]
        print(render({}, cfg.output_format, rows), end="")
        for r in results:
            if not r.match:
                print(f"L_{{N0,{r.h}}}({r.k}): missing {list(r.missing)} extra {list(r.extra)}")
        print(summary)
    return 0 if matched == len(results) else EXIT_CODES["table_mismatch"]


def cmd_report(args, cfg) -> int:
    rep = open_problem_report(range(args.h_min, args.h_max + 1), range(args.k_min, args.k_max + 1),
                              args.negative_reach, Budget(cfg.budget))
    print(render(rep, "json"), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="result cache directory (default: $ADDITIVE_BASES_CACHE or ~/.cache/additive_bases)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max profile evaluations")
    common.add_argument("--dense-width-cap", type=int, default=DEFAULT_DENSE_WIDTH_CAP)
    common.add_argument("--jobs", dest="parallelism", type=int, default=1)

    parser = _ArgumentParser(prog="additive-bases", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    for name in ("sumset", "ell"):
        p = sub.add_parser(name, parents=[common], help="h-fold sumset profile of a set")
        p.add_argument("set", help='set literal such as "{0,1,3}"')
        p.add_argument("--h", type=int, required=True)
        p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("spectrum", parents=[common], help="L_{X,h}(k) or its interval variant")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ground", choices=("N0", "Z"), default="N0")
    p.add_argument("--window", type=_interval, help="LO,HI search window for --ground Z")
    p.add_argument("--sharp", action="store_true", help="interval variant L#")
    p.add_argument("--bound", type=int, help="element bound for --sharp")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("extremal", parents=[common], help="n, n_sharp, m, m_sharp or k_dual")
    p.add_argument("kind", choices=("n", "n_sharp", "m", "m_sharp", "k_dual"))
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--window", type=_interval)
    p.add_argument("--max-element", type=int)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("construct", parents=[common], help="build and certify an isolated interval 2-basis")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", help="also write the certified record to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="re-verify a stored construction record")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("separated", parents=[common], help="Δ-separation checks")
    p.add_argument("set")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--h", type=int, default=2)
    p.add_argument("--level", type=int)
    p.add_argument("--subset-sums", action="store_true")
    p.add_argument("--compare", action="store_true", help="multiset level vs subset-sum modes")
    p.set_defaults(func=cmd_separated)

    p = sub.add_parser("tables", parents=[common], help="regenerate the published L_{N0,h}(k) tables")
    p.add_argument("--h", type=int)
    p.add_argument("--expected", help='JSON file {"h,k": "{...} ∪ [a,b]"} replacing the embedded tables')
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("report", parents=[common], help="open-question evidence over small h, k")
    p.add_argument("--h-min", type=int, default=2)
    p.add_argument("--h-max", type=int, default=4)
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--negative-reach", type=int, default=6)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cache_dir is None:
        args.cache_dir = default_cache_dir()
    try:
        cfg = RunConfig(args.budget, args.dense_width_cap, args.cache_dir, args.parallelism, args.output_format)
        return args.func(args, cfg)
    except IntegerOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["overflow"]
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["budget"]
    except VerificationError as exc:
        print(f"error: {exc}: {exc.counterexamples}", file=sys.stderr)
        return EXIT_CODES["verification"]
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["parse"]


if __name__ == "__main__":
    sys.exit(main())
