"""Command-line front end: ``vincular count|classify|biject|gf|verify``.

Exit codes: 0 ok, 1 suite failure, 2 usage/parse/domain error,
3 guardrail exceeded, 4 word outside a map's domain, 5 verification
mismatch.  ``--output json`` switches every command to JSON lines.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional

from . import genfun as gf
from .bijections import (FORWARD, INVERSE, THM33_MAPS, DomainError, thm21_map, thm25_map)
from .checks import SUITES, run_suite
from .enumeration import (GuardrailError, count_avoiders, count_avoiders_by_content,
                          count_avoiders_prefix, guardrail, wilf_classify)
from .tables import PUBLISHED
from .words import (Pattern, PatternError, PatternParseError, all_patterns, check_word,
                    format_pattern, format_word, parse_pattern, parse_word)

EXIT_OK, EXIT_SUITE, EXIT_USAGE, EXIT_GUARDRAIL, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5

BIJECTIONS = ("2.1", "2.5") + tuple(THM33_MAPS)
GF_THEOREMS = ("4.1",) + tuple(gf.THEOREMS)
GF_ROUTES = {"4.1": ("dp", "closed"), "4.5": ("recurrence", "chebyshev"),
             "4.10": ("closed", "first-letter")}


@dataclass
class Config:
    guardrail: int = 10**8
    default_order: int = gf.DEFAULT_ORDER
    output: str = "text"

    def __post_init__(self):
        if self.guardrail < 1:
            raise ValueError("guardrail must be at least 1")
        if self.default_order < 4:
            raise ValueError("default order must be at least 4")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")


class UsageError(Exception):
    pass


def _emit(cfg: Config, record: dict, text: str) -> None:
    print(json.dumps(record) if cfg.output == "json" else text)


# -- commands -----------------------------------------------------------------

def cmd_count(args, cfg: Config) -> int:
    p = parse_pattern(args.pattern)
    record = {"pattern": format_pattern(p), "n": args.n, "k": args.k}
    if args.prefix is not None and args.content is not None:
        raise UsageError("--prefix and --content cannot be combined")
    if args.prefix is not None:
        prefix = parse_word(args.prefix)
        c = count_avoiders_prefix(args.n, args.k, p, prefix, cfg.guardrail)
        record["prefix"] = format_word(prefix)
    elif args.content is not None:
        content = parse_word(args.content)
        c = count_avoiders_by_content(args.n, args.k, p, content, cfg.guardrail)
        record["content"] = format_word(sorted(content))
    else:
        c = count_avoiders(args.n, args.k, p, cfg.guardrail)
    record["count"] = c
    _emit(cfg, record, str(c))
    return EXIT_OK


def _parse_type(text: str):
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad --type {text!r}; expected e.g. 3,1")
    if not parts or any(s < 1 for s in parts):
        raise UsageError("type parts must be at least 1")
    return parts


def cmd_classify(args, cfg: Config) -> int:
    dash_type = _parse_type(args.type)
    universe = all_patterns(sum(dash_type), dash_type)
    cls = wilf_classify(universe, args.n_max, args.k_max, cfg.guardrail, args.workers)
    reduced = cls.reduced_classes()
    consistent = cls.orbits_refine_classes()
    if cfg.output == "json":
        d = cls.to_dict()
        for c, red in zip(d["classes"], reduced):
            c["representatives"] = [format_pattern(p) for p in red]
            print(json.dumps(c))
        print(json.dumps({"type": list(dash_type), "patterns": len(universe),
                          "classes": len(cls.classes), "orbits": len(cls.symmetry_orbits),
                          "consistent": consistent}))
    else:
        for red in reduced:
            print(" ~ ".join(format_pattern(p) for p in red))
        print(f"{len(universe)} patterns, {len(cls.symmetry_orbits)} symmetry orbits, "
              f"{len(cls.classes)} classes (n<={args.n_max}, k<={args.k_max})")
    if dash_type in PUBLISHED:
        _report_published(cls, dash_type, cfg)
    return EXIT_OK if consistent else EXIT_SUITE


def _report_published(cls, dash_type, cfg: Config) -> None:
    """Say which published groups the census reproduces and which it merges."""
    index = {p: i for i, c in enumerate(cls.classes) for p in c}
    seen = {}
    for group in PUBLISHED[dash_type]:
        pats = [parse_pattern(s) for s in group]
        ids = {index[p] for p in pats}
        if len(ids) > 1:
            _emit(cfg, {"published": group, "status": "split"},
                  f"published group {' ~ '.join(group)} is split by the census")
            continue
        i = ids.pop()
        if i in seen:
            _emit(cfg, {"published": group, "status": "merged", "with": seen[i]},
                  f"published group {' ~ '.join(group)} is not separated from "
                  f"{' ~ '.join(seen[i])} in this range")
        else:
            seen[i] = group


def _trace_lines(trace: List[tuple]) -> List[str]:
    return [f"pi_{i} = {format_word(w)}" for i, w in enumerate(trace, start=1)]


def cmd_biject(args, cfg: Config) -> int:
    w = parse_word(args.word)
    check_word(w, args.k)
    direction = INVERSE if args.inverse else FORWARD
    trace: Optional[list] = [] if args.trace else None
    check = not args.no_check
    if args.theorem == "2.1":
        sigma = parse_pattern(args.sigma or "1")
        out = thm21_map(w, parse_pattern(args.tau), parse_pattern(args.rho), sigma, args.k,
                        direction=direction, check=check)
    elif args.theorem == "2.5":
        sigma = parse_pattern(args.sigma or "1")
        out = thm25_map(w, sigma, args.k, direction, check=check, trace=trace)
    else:
        fn = THM33_MAPS[args.theorem][0]
        out = fn(w, args.k, direction, check=check, trace=trace)
    record = {"theorem": args.theorem, "direction": direction, "k": args.k,
              "input": format_word(w), "output": format_word(out)}
    lines = []
    if trace is not None:
        record["stages"] = [format_word(s) for s in trace]
        lines = _trace_lines(trace)
    _emit(cfg, record, "\n".join(lines + [format_word(out)]))
    return EXIT_OK


def cmd_gf(args, cfg: Config) -> int:
    order = args.order if args.order is not None else cfg.default_order
    if order < 0:
        raise UsageError("--order must be nonnegative")
    if args.route and args.route not in GF_ROUTES.get(args.theorem, ()):
        known = ", ".join(GF_ROUTES.get(args.theorem, ())) or "none"
        raise UsageError(f"theorem {args.theorem} routes: {known}")
    if args.theorem == "4.1":
        if not args.subword:
            raise UsageError("theorem 4.1 needs --subword")
        tau = Pattern.subword(parse_word(args.subword))
        inner = None
        if args.route == "closed":
            key = format_pattern(gf._tau_prime(tau))
            if key not in gf.EXAMPLE41:
                raise gf.FormulaDomainError(f"no closed inner series for {args.subword}")
            inner = gf.EXAMPLE41[key][2]
        res = gf.thm41_product(tau, args.k, order, inner)
    else:
        fn = gf.THEOREMS[args.theorem][1]
        res = fn(args.k, order, route=args.route) if args.route else fn(args.k, order)
    coeffs = [str(c) for c in res.coefficients()]
    _emit(cfg, res.to_dict(),
          f"W_{format_pattern(res.pattern)}(x;{res.k}) = {res.series}\n{' '.join(coeffs)}")
    if args.verify:
        rep = gf.verify_gf(res, order, cap=cfg.guardrail)
        _emit(cfg, {"verify": rep.passed, "detail": rep.summary()}, rep.summary())
        if not rep.passed:
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    results = run_suite(args.suite, args.n_max, args.k_max)
    for r in results:
        _emit(cfg, r.to_dict(), r.line())
    failed = sum(not r.passed for r in results)
    _emit(cfg, {"suite": args.suite, "checks": len(results), "failed": failed},
          f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_SUITE


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="vincular",
                                 description="Vincular pattern avoidance in k-ary words.")
    ap.add_argument("--output", choices=("text", "json"), default="text")
    ap.add_argument("--guardrail", type=int, default=None,
                    help="max k^n per counting cell (default: $VINCULAR_GUARDRAIL or 10^8)")
    ap.add_argument("--default-order", type=int, default=gf.DEFAULT_ORDER)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count avoiders a_P(n,k)")
    c.add_argument("--pattern", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--prefix", help="only words starting with this word")
    c.add_argument("--content", help="only rearrangements of this multiset of letters")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("classify", help="Wilf-classify all patterns of a dash type")
    c.add_argument("--type", required=True, help="block lengths, e.g. 3,1")
    c.add_argument("--n-max", type=int, default=8)
    c.add_argument("--k-max", type=int, default=4)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("biject", help="apply one of the explicit bijections")
    c.add_argument("--theorem", required=True, choices=BIJECTIONS)
    c.add_argument("--word", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--sigma", help="subword sigma (2.1, 2.5); default 1")
    c.add_argument("--tau", default="12", help="subword tau (2.1)")
    c.add_argument("--rho", default="21", help="subword rho (2.1); realized by reversal")
    c.add_argument("--inverse", action="store_true")
    c.add_argument("--trace", action="store_true", help="print intermediate stages")
    c.add_argument("--no-check", action="store_true", help="skip the domain check")
    c.set_defaults(func=cmd_biject)

    c = sub.add_parser("gf", help="evaluate a generating function")
    c.add_argument("--theorem", required=True, choices=GF_THEOREMS)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--order", type=int, default=None)
    c.add_argument("--subword", help="subword tau for 4.1")
    c.add_argument("--route", help="evaluation route where several exist")
    c.add_argument("--verify", action="store_true", help="compare with enumeration")
    c.set_defaults(func=cmd_gf)

    c = sub.add_parser("verify", help="run a verification suite")
    c.add_argument("--suite", choices=SUITES, default="all")
    c.add_argument("--n-max", type=int, default=8)
    c.add_argument("--k-max", type=int, default=4)
    c.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = Config(args.guardrail if args.guardrail is not None else guardrail(),
                     args.default_order, args.output)
        return args.func(args, cfg)
    except GuardrailError as exc:
        print(f"guardrail: {exc}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except gf.FormulaError as exc:
        print(f"formula error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except PatternParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, PatternError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
