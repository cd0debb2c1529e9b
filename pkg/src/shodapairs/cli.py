"""Command-line interface.

Groups are given as a builtin spec (``dihedral:8``, ``cyclic:2*symmetric:3``),
an inline permutation list (``perm:5:(0 1 2 3 4);(1 4)(2 3)``) or a path to a
group file (``degree: n`` header, then one cycle-notation generator per line).

Exit codes: 0 success, 1 computation limit exceeded, 2 parse error,
3 ``verify`` found a violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import __version__
from .algebra import DIM_ORACLE_CAP, AlgebraElement, dim_direct, dim_formula, e_of
from .bench import rows_to_csv, rows_to_table, run_bench, select_variants
from .builders import builtin_group, group_from_cycles, parse_group_file
from .errors import GroupSizeError, ParseError
from .group import DEFAULT_ORDER_CAP, FiniteGroup
from .oracle import linear_pci_set, verify_pci_set
from .search import (SearchOptions, ext_strong_shoda_pairs, serialize_idempotent,
                     strong_shoda_pairs)

EXIT_OK, EXIT_LIMIT, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


def group_factory(text: str, cap: int = DEFAULT_ORDER_CAP) -> Callable[[], FiniteGroup]:
    """Validate ``text`` once and return a callable building fresh copies of the group."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            content = fh.read()
        parse_group_file(content, cap=cap)
        return lambda: parse_group_file(content, cap=cap, name=os.path.basename(text))
    if text.startswith("perm:"):
        _, deg, body = text.split(":", 2) if text.count(":") >= 2 else (None, None, None)
        if deg is None:
            raise ParseError("expected perm:<degree>:<gen>;<gen>...")
        try:
            degree = int(deg)
        except ValueError:
            raise ParseError(f"bad degree {deg!r}") from None
        gens = [g for g in body.split(";") if g.strip()]
        group_from_cycles(degree, gens, cap=cap)
        return lambda: group_from_cycles(degree, gens, cap=cap, name=text)
    builtin_group(text, cap=cap)
    return lambda: builtin_group(text, cap=cap)


def load_group(text: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    return group_factory(text, cap)()


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _pairs_text(report) -> str:
    lines = [f"group order {report.group.order}; sum_dim {report.sum_dim}; "
             f"complete {report.complete}; verdict {report.verdict}"]
    for i, p in enumerate(report.pairs):
        d = p.to_dict()
        lines.append(f"[{i}] {p.kind:16s} dim {p.dim:4d}  "
                     f"H(order {p.H.order}) = <{', '.join(d['H']['generators'])}>  "
                     f"K(order {p.K.order}) = <{', '.join(d['K']['generators'])}>")
    return "\n".join(lines)


def _idem_text(es: list[AlgebraElement]) -> str:
    lines = []
    for i, e in enumerate(es):
        terms = " + ".join(f"{n}/{d}*{s}" if d != 1 else f"{n}*{s}" for s, n, d in e.to_triples())
        lines.append(f"[{i}] {terms}")
    return "\n".join(lines)


def _options(args) -> SearchOptions:
    return SearchOptions(lemma1=not getattr(args, "no_lemma1", False),
                         lemma3=not getattr(args, "no_lemma3", False))


def cmd_essp(args) -> int:
    G = load_group(args.group, args.cap)
    rep = ext_strong_shoda_pairs(G, _options(args))
    _emit(args, rep.to_dict(), _pairs_text(rep))
    return EXIT_OK


def cmd_ssp(args) -> int:
    G = load_group(args.group, args.cap)
    rep = strong_shoda_pairs(G, _options(args))
    _emit(args, rep.to_dict(), _pairs_text(rep))
    return EXIT_OK


def cmd_pcis(args) -> int:
    G = load_group(args.group, args.cap)
    opts = _options(args)
    opts.collect_idempotents = True
    fn = ext_strong_shoda_pairs if args.method == "essp" else strong_shoda_pairs
    rep = fn(G, opts)
    es = rep.idempotents
    total = AlgebraElement.zero(G)
    for e in es:
        total = total + e
    payload = {"method": args.method, "group_order": G.order, "count": len(es),
               "sum_is_one": total == AlgebraElement.one(G),
               "idempotents": [serialize_idempotent(e) for e in es]}
    text = (f"{len(es)} idempotents; sum is one: {payload['sum_is_one']}\n" + _idem_text(es))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_is_normally_monomial(args) -> int:
    G = load_group(args.group, args.cap)
    rep = ext_strong_shoda_pairs(G)
    nm = rep.sum_dim == G.order
    _emit(args, {"normally_monomial": nm, "sum_dim": rep.sum_dim, "group_order": G.order},
          f"{str(nm).lower()} (sum_dim {rep.sum_dim} of {G.order})")
    return EXIT_OK


def cmd_verify(args) -> int:
    G = load_group(args.group, args.cap)
    fn = ext_strong_shoda_pairs if args.method == "essp" else strong_shoda_pairs
    rep = fn(G, SearchOptions(collect_idempotents=True))
    vr = verify_pci_set(G, rep.idempotents, claimed_complete=rep.complete,
                        oracle_cap=args.oracle_cap)
    dims = []
    if G.order <= args.oracle_cap:
        for p, e in zip(rep.pairs, rep.idempotents):
            direct = dim_direct(G, e, cap=args.oracle_cap)
            formula = dim_formula(G, p.H, p.K)
            dims.append({"formula": formula, "direct": direct})
            if formula != direct:
                vr.fail(f"dimension mismatch for pair of dim {formula}: direct {direct}")
    linear = set(linear_pci_set(G))
    if not linear <= set(rep.idempotents):
        vr.fail("some linear-character idempotent is missing")
    rational = G.rational_class_count()
    if rep.verdict == "normally_monomial" and len(rep.pairs) != rational:
        vr.fail(f"{len(rep.pairs)} pairs but {rational} rational classes")
    payload = {"method": args.method, "group_order": G.order, "sum_dim": rep.sum_dim,
               "complete": rep.complete, "verdict": rep.verdict,
               "rational_class_count": rational, "dimensions": dims, **vr.to_dict()}
    status = "ok" if vr.ok else "FAILED"
    text = [f"verify {status}: {vr.count} idempotents, sum_dim {rep.sum_dim}/{G.order}, "
            f"sum is one {vr.sum_is_one}, rational classes {rational}"]
    text += [f"  - {f}" for f in vr.failures]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if vr.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    factory = group_factory(args.group, args.cap)
    variants = select_variants(args.no_lemma1, args.no_lemma3, args.direct_ssp)
    rows = run_bench(factory, variants, repeat=args.repeat)
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in rows], indent=2, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        print(rows_to_table(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shodapairs",
                                 description="Shoda pairs and primitive central idempotents of Q[G].")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("group", help="builtin spec, perm:<deg>:<gens> or group file path")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                       help="maximum group order to enumerate")
        return p

    for name, fn, hlp in (("essp", cmd_essp, "extremely strong Shoda pairs"),
                          ("ssp", cmd_ssp, "strong Shoda pairs")):
        p = common(sub.add_parser(name, help=hlp))
        p.add_argument("--no-lemma1", action="store_true")
        p.add_argument("--no-lemma3", action="store_true")
        p.set_defaults(func=fn)

    p = common(sub.add_parser("pcis", help="primitive central idempotents"))
    p.add_argument("--method", choices=("essp", "ssp"), default="ssp")
    p.set_defaults(func=cmd_pcis)

    p = common(sub.add_parser("is-normally-monomial", help="normal monomiality test"))
    p.set_defaults(func=cmd_is_normally_monomial)

    p = common(sub.add_parser("verify", help="cross-check idempotents with brute force"))
    p.add_argument("--method", choices=("essp", "ssp"), default="ssp")
    p.add_argument("--oracle-cap", type=int, default=DIM_ORACLE_CAP)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("bench", help="timing and counters of search variants"),
               formats=("text", "csv", "json"))
    p.add_argument("--no-lemma1", action="store_true")
    p.add_argument("--no-lemma3", action="store_true")
    p.add_argument("--direct-ssp", action="store_true")
    p.add_argument("--repeat", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GroupSizeError as exc:
        print(f"computation limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
