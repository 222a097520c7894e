"""ordcomp command-line interface.

Exit codes: 0 success, 1 domain error (e.g. not a shifted sum), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import acceptance, catalog, finite
from .ordinal import (
    ALEPH0, KAPPA_CARD, KAPPA_PLUS_CARD, CardClass, Ordinal, OrdinalError, OrdinalSyntaxError, cmp,
    natural_sum, parse,
)
from .sums import is_mixed_sum, is_shifted_sum, min_mixed_sum, mixed_sums, shifted_sums, sigma, star_sum
from .transfer import ImplicationQuery, Interval, SpaceClass, implies_compactness


class UsageError(Exception):
    pass


def _ord(text: str) -> Ordinal:
    try:
        return parse(text)
    except OrdinalSyntaxError as e:
        raise UsageError(str(e)) from e


def _interval(text: str) -> Interval:
    try:
        return Interval.parse(text)
    except OrdinalError as e:
        raise UsageError(str(e)) from e


_CARDS = {"w": ALEPH0, "k": KAPPA_CARD, "k+": KAPPA_PLUS_CARD}


def _split_args(body: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in body:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch in "([{"
        depth -= ch in ")]}"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def parse_space(text: str) -> catalog.SpaceDescr:
    """JSON, or the short forms iit:k, discrete:5, ord, kappa_kappa, sbeta:B[:A[:variant]],
    union(a, b, ...), frechet(a, ...), plus(a, m) for a with m extra discrete points."""
    t = text.strip()
    if t.startswith("{"):
        try:
            return catalog.from_json(json.loads(t))
        except (ValueError, KeyError) as e:
            raise UsageError(f"bad space JSON: {e}") from e
    m = re.fullmatch(r"(\w+)\((.*)\)", t)
    if m:
        name, args = m.group(1), _split_args(m.group(2))
        if name == "union":
            return catalog.DisjointUnion(tuple(parse_space(a) for a in args))
        if name == "frechet":
            return catalog.FrechetDisjointUnion(tuple(parse_space(a) for a in args))
        if name == "plus" and len(args) == 2 and args[1].isdigit():
            return catalog.WithFiniteDiscrete(parse_space(args[0]), int(args[1]))
        raise UsageError(f"unknown space constructor {name!r}")
    head, *rest = t.split(":")
    try:
        if head == "iit":
            return catalog.Iit(_CARDS[rest[0]] if rest else KAPPA_CARD)
        if head == "discrete":
            c = rest[0] if rest else "k"
            return catalog.Discrete(_CARDS[c] if c in _CARDS else CardClass.finite(int(c)))
        if head == "ord":
            return catalog.Ord()
        if head in ("kappa_kappa", "kk"):
            return catalog.KappaKappa()
        if head == "sbeta":
            beta = _ord(rest[0])
            alpha = _ord(rest[1]) if len(rest) > 1 else beta
            return catalog.SBeta(beta, alpha, rest[2] if len(rest) > 2 else "plain")
    except (KeyError, IndexError, ValueError) as e:
        raise UsageError(f"bad space {text!r}: {e}") from e
    raise UsageError(f"unknown space {text!r}")


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _sorted(xs) -> list[Ordinal]:
    return sorted(xs, key=lambda x: x.key)


# ---------------------------------------------------------------- commands


def cmd_eval(args) -> int:
    x = _ord(args.expr)
    _emit(args, str(x), {"value": str(x)})
    return 0


def cmd_cmp(args) -> int:
    c = cmp(_ord(args.a), _ord(args.b))
    sym = "<" if c < 0 else ">" if c > 0 else "="
    _emit(args, sym, {"cmp": c})
    return 0


def cmd_nsum(args) -> int:
    x = natural_sum(_ord(args.a), _ord(args.b))
    _emit(args, str(x), {"value": str(x)})
    return 0


def _sum_list(args, enum, test) -> int:
    a, b = _ord(args.a), _ord(args.b)
    if args.check is not None:
        g = _ord(args.check)
        ok = test(g, a, b)
        _emit(args, "yes" if ok else "no", {"value": str(g), "member": ok})
        return 0 if ok else 1
    xs = [str(x) for x in _sorted(enum(a, b))]
    _emit(args, "\n".join(xs), {"values": xs})
    return 0


def cmd_shifted(args) -> int:
    return _sum_list(args, shifted_sums, is_shifted_sum)


def cmd_mixed(args) -> int:
    return _sum_list(args, mixed_sums, is_mixed_sum)


def cmd_minmixed(args) -> int:
    x = min_mixed_sum(_ord(args.a), _ord(args.b))
    _emit(args, str(x), {"value": str(x)})
    return 0


def cmd_starsum(args) -> int:
    x = star_sum(_ord(args.a), _ord(args.b))
    _emit(args, str(x), {"value": str(x)})
    return 0


def cmd_sigma(args) -> int:
    s = [str(e) for e in sigma(_ord(args.expr))]
    _emit(args, " ".join(s), {"sigma": s})
    return 0


def cmd_lindelof(args) -> int:
    s = parse_space(args.space)
    v = catalog.lindelof_ordinal(s)
    _emit(args, "unknown" if v is None else str(v), {"space": s.to_json(), "lindelof": None if v is None else str(v)})
    return 0


def cmd_compact(args) -> int:
    s = parse_space(args.space)
    v = catalog.is_compact(s, _interval(args.interval))
    _emit(args, v.status + (f" ({v.rule})" if v.rule else ""), {"space": s.to_json(), **v.to_json()})
    return 0


def cmd_implies(args) -> int:
    try:
        cls = SpaceClass.parse(args.cls)
    except ValueError as e:
        raise UsageError(str(e)) from e
    q = ImplicationQuery(_interval(args.src), _interval(args.dst), cls)
    v = implies_compactness(q)
    text = v.status
    if v.rules:
        text += " via " + ", ".join(v.rules)
    if v.witness is not None:
        text += f"; witness {v.witness}"
    _emit(args, text, v.to_json())
    return 0


def cmd_oracle(args) -> int:
    seed = acceptance.default_seed() if args.seed is None else args.seed
    if args.out:
        spaces = finite.all_spaces(args.max_points, args.max_family) + finite.sample_spaces(args.sampled, seed)
        finite.write_jsonl(args.out, finite.oracle_records(spaces, args.bound, args.jobs))
    rep = finite.oracle_report(args.max_points, args.max_family, args.bound, args.jobs, args.sampled, seed)
    counts = {k: (v if isinstance(v, int) else len(v)) for k, v in rep.items()}
    ok = all(v == 0 for k, v in counts.items() if k != "spaces")
    _emit(args, " ".join(f"{k}={v}" for k, v in counts.items()), rep)
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    seed = acceptance.default_seed() if args.seed is None else args.seed
    results = []
    for i in range(1, len(acceptance.CRITERIA) + 1):
        r = acceptance.run(i, seed, args.jobs)
        results.append(r)
        if not args.json:
            print(r.line(), flush=True)
    if args.json:
        print(json.dumps([{"criterion": r.number, "passed": r.passed, "detail": r.detail} for r in results]))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="ordcomp", description="Ordinal arithmetic and ordinal compactness.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, *pos):
        sp = sub.add_parser(name, help=help_, parents=[common])
        for a in pos:
            sp.add_argument(a)
        sp.set_defaults(fn=fn)
        return sp

    add("eval", cmd_eval, "normalize an ordinal expression", "expr")
    add("cmp", cmd_cmp, "compare two ordinals", "a", "b")
    add("nsum", cmd_nsum, "natural (Hessenberg) sum", "a", "b")
    for name, fn, h in [("shifted", cmd_shifted, "shifted sums"), ("mixed", cmd_mixed, "mixed sums")]:
        sp = add(name, fn, h, "a", "b")
        sp.add_argument("--check", metavar="G", help="test membership of G instead of listing")
    add("minmixed", cmd_minmixed, "least mixed sum", "a", "b")
    add("starsum", cmd_starsum, "the +* operation", "a", "b")
    add("sigma", cmd_sigma, "exponent sequence of the CNF", "expr")
    add("lindelof", cmd_lindelof, "Lindelof ordinal of a catalog space", "space")
    add("compact", cmd_compact, "compactness of a catalog space on an interval", "space", "interval")
    sp = add("implies", cmd_implies, "does compactness on SRC imply compactness on DST", "src", "dst")
    sp.add_argument("--class", dest="cls", default="arbitrary",
                    help="arbitrary, union_closed, t1, lambda_t1:w|k, card_bound:w|k, card_bound_union_closed:w|k")
    sp = add("oracle", cmd_oracle, "finite brute-force sweeps")
    sp.add_argument("--max-points", type=int, default=3)
    sp.add_argument("--max-family", type=int, default=5)
    sp.add_argument("--bound", type=int, default=4)
    sp.add_argument("--sampled", type=int, default=0, help="extra random spaces with up to 6 points")
    sp.add_argument("--out", help="write per-query JSON lines here")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("selftest", cmd_selftest, "run the acceptance criteria")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"ordcomp: {e}", file=sys.stderr)
        return 2
    except (OrdinalError, ValueError) as e:
        print(f"ordcomp: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
