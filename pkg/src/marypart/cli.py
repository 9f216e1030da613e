"""Command line interface: ``marypart count|enumerate|stratify|verify``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import congruence
from .digits import to_base_m
from .partitions import CapExceeded, count_bm, count_triple, default_cap, enumerate_all, is_simple
from .stratification import Stratification, nops_histogram, stratify

CLAIMS = ("afs", "equidist_N", "digit_criterion", "equidist_S", "nmc")
ENUMERATING = {"equidist_N", "digit_criterion", "nmc"}


# -- argument types ---------------------------------------------------------

def natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def base(text: str) -> int:
    value = natural(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"base must be >= 2: {text!r}")
    return value


def int_range(text: str) -> range:
    """``a..b`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or INT..INT, got {text!r}")
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"empty or negative range: {text!r}")
    return range(a, b + 1)


def base_range(text: str) -> range:
    r = int_range(text)
    if r.start < 2:
        raise argparse.ArgumentTypeError(f"bases must be >= 2: {text!r}")
    return r


def int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")
    if not values or min(values) < 0:
        raise argparse.ArgumentTypeError(f"expected naturals, got {text!r}")
    return values


def claim_list(text: str) -> list[str]:
    claims = [x.strip() for x in text.split(",") if x.strip()]
    unknown = set(claims) - set(CLAIMS)
    if unknown or not claims:
        raise argparse.ArgumentTypeError(
            f"unknown claims {sorted(unknown)}; choose from {','.join(CLAIMS)}")
    return claims


# -- reports ----------------------------------------------------------------

def _fmt(mults) -> str:
    return "[" + ",".join(map(str, mults)) + "]"


def stratify_report(s: Stratification) -> dict:
    """JSON document for a stratification; big counts are decimal strings."""
    width = len(to_base_m(s.n, s.m))
    triple = count_triple(s.n, s.m)
    fibers = []
    for b, strata in s.fibers.items():
        fibers.append({
            "b": str(b),
            "digits": list(to_base_m(b, s.m).digits) + [0] * (width - len(to_base_m(b, s.m))),
            "strata": [
                {
                    "z": z,
                    "classes": [
                        {
                            "tail": list(c.tail),
                            "r": c.r,
                            "members": [p.padded(width) for p in c.members],
                            "nops_mod_m": list(nops_histogram(c.members, s.m).counts),
                        }
                        for c in classes
                    ],
                }
                for z, classes in strata.items()
            ],
        })
    return {
        "n": str(s.n),
        "m": s.m,
        "b": str(triple.all),
        "simple_count": str(triple.simple),
        "nonsimple_count": str(triple.nonsimple),
        "fibers": fibers,
    }


def stratify_text(s: Stratification) -> str:
    if not len(s):
        return "N is empty"
    width = len(to_base_m(s.n, s.m))
    triple = count_triple(s.n, s.m)
    lines = [f"n={s.n} m={s.m} b={triple.all} simple={triple.simple} nonsimple={triple.nonsimple}"]
    for b, strata in s.fibers.items():
        digits = to_base_m(b, s.m).digits
        digits = list(digits) + [0] * (width - len(digits))
        lines.append(f"f^-1({b}); {b}=({','.join(map(str, digits))})_{s.m}; size {s.fiber_size(b)}")
        for z, classes in strata.items():
            lines.append(f"  B({z})")
            for c in classes:
                # listed with the multiplicity of 1 ascending, as in hand-drawn tables
                shown = " ".join(_fmt(p.padded(width)) for p in reversed(c.members))
                lines.append(f"    {c.label()}: {shown}")
                counts = " ".join(map(str, nops_histogram(c.members, s.m).counts))
                lines.append(f"      r={c.r} nops mod {s.m}: {counts}")
    return "\n".join(lines)


# -- sweep ------------------------------------------------------------------

@dataclass
class SweepSpec:
    m_range: range
    n_range: range
    c_values: list[int] = field(default_factory=lambda: [1])
    cap: int = 10**7
    claims: list[str] = field(default_factory=lambda: list(CLAIMS))

    def __post_init__(self):
        if not len(self.m_range) or not len(self.n_range):
            raise ValueError("ranges must be nonempty")
        if self.cap < 1:
            raise ValueError("cap must be >= 1")

    def points(self):
        for m in self.m_range:
            for n in self.n_range:
                for claim in self.claims:
                    if claim == "nmc":
                        for c in self.c_values:
                            yield claim, n, m, c
                    else:
                        yield claim, n, m, None


def run_point(point, cap):
    """Evaluate one grid point. Returns an outcome, or a skip record dict."""
    claim, n, m, c = point
    if claim in ENUMERATING and count_bm(n, m) > cap:
        return {"claim": claim, "n": n, "m": m, "c": c, "skipped": f"b_m(n)={count_bm(n, m)} > cap"}
    if claim == "afs":
        return congruence.verify_afs(n, m)
    if claim == "equidist_N":
        return congruence.verify_nonsimple(n, m, cap)
    if claim == "digit_criterion":
        return congruence.verify_digit_criterion(n, m, cap)
    if claim == "equidist_S":
        return congruence.verify_equidistribution_S(n, m, cap)
    return congruence.verify_nmc_congruence(n, m, c, cap)


def _run_chunk(args):
    points, cap = args
    return [run_point(p, cap) for p in points]


def run_sweep(spec: SweepSpec, jobs: int = 1) -> list:
    """All results in (m, n, claim, c) grid order."""
    points = list(spec.points())
    if jobs <= 1:
        return [run_point(p, spec.cap) for p in points]
    size = max(1, len(points) // (jobs * 8))
    chunks = [(points[i:i + size], spec.cap) for i in range(0, len(points), size)]
    with ProcessPoolExecutor(jobs) as pool:
        return [r for chunk in pool.map(_run_chunk, chunks) for r in chunk]


def summarize(spec: SweepSpec, results) -> dict[str, dict[str, int]]:
    table = {claim: {"checked": 0, "held": 0, "failed": 0, "skipped": 0} for claim in spec.claims}
    for r in results:
        if isinstance(r, dict):
            table[r["claim"]]["skipped"] += 1
            continue
        row = table[r.claim]
        row["checked"] += 1
        row["held" if r.holds else "failed"] += 1
    return table


# -- commands ---------------------------------------------------------------

def cmd_count(args) -> int:
    t = count_triple(args.n, args.base)
    q = t.nonsimple // args.base
    if args.format == "json":
        print(json.dumps({"n": str(args.n), "m": args.base, "b": str(t.all), "simple": str(t.simple),
                          "nonsimple": str(t.nonsimple), "q": str(q)}))
    else:
        print(f"b={t.all} simple={t.simple} nonsimple={t.nonsimple} q={q}")
    return 0


def cmd_enumerate(args) -> int:
    width = len(to_base_m(args.n, args.base))
    rows = []
    for p in enumerate_all(args.n, args.base, args.cap):
        if args.filter != "all" and is_simple(p, args.n) != (args.filter == "simple"):
            continue
        rows.append(p)
    if args.format == "json":
        out = [{"mults": p.padded(width), "nops": p.nops} if args.with_nops else p.padded(width)
               for p in rows]
        print(json.dumps(out))
    else:
        for p in rows:
            line = _fmt(p.padded(width))
            print(f"{line} {p.nops}" if args.with_nops else line)
    return 0


def cmd_stratify(args) -> int:
    s = stratify(args.n, args.base, args.cap)
    if args.format == "json":
        print(json.dumps(stratify_report(s)))
    else:
        print(stratify_text(s))
    return 0


def cmd_verify(args) -> int:
    spec = SweepSpec(args.base, args.n, args.c, args.cap, args.claims)
    results = run_sweep(spec, args.jobs)
    failures = [r.witness_record() for r in results if not isinstance(r, dict) and not r.holds]
    skipped = [r for r in results if isinstance(r, dict)]
    for s in skipped:
        print(f"skip {s['claim']} n={s['n']} m={s['m']} c={s['c']}: {s['skipped']}", file=sys.stderr)
    table = summarize(spec, results)
    if args.witness_out:
        with open(args.witness_out, "w") as fh:
            json.dump(failures, fh, indent=1)
    if args.format == "json":
        print(json.dumps({"summary": table, "failures": failures, "skipped": skipped}))
    else:
        print(f"{'claim':<16}{'checked':>9}{'held':>9}{'failed':>9}{'skipped':>9}")
        for claim, row in table.items():
            print(f"{claim:<16}" + "".join(f"{row[k]:>9}" for k in ("checked", "held", "failed", "skipped")))
        if failures and not args.witness_out:
            for w in failures:
                print(json.dumps(w))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=natural, default=None,
                        help="max partitions to materialize (default: $MARY_CAP or 10^7)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="marypart", description="m-ary partition tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="b_m(n) with the simple/non-simple split")
    p.add_argument("n", type=natural)
    p.add_argument("--base", "-m", type=base, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list m-ary partitions of n")
    p.add_argument("n", type=natural)
    p.add_argument("--base", "-m", type=base, required=True)
    p.add_argument("--filter", choices=("all", "simple", "nonsimple"), default="all")
    p.add_argument("--with-nops", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("stratify", parents=[common], help="decompose the non-simple partitions of n")
    p.add_argument("n", type=natural)
    p.add_argument("--base", "-m", type=base, required=True)
    p.set_defaults(func=cmd_stratify)

    p = sub.add_parser("verify", parents=[common], help="sweep claims over a grid")
    p.add_argument("--claims", type=claim_list, default=list(CLAIMS))
    p.add_argument("--base", "-m", type=base_range, required=True, help="M or M1..M2")
    p.add_argument("--n", type=int_range, required=True, help="N or N1..N2")
    p.add_argument("--c", type=int_list, default=[1], help="comma separated c values for nmc")
    p.add_argument("--jobs", type=natural, default=1)
    p.add_argument("--witness-out", help="write failure witnesses to this JSON file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None:
        args.cap = default_cap()
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
