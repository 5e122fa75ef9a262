"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 undecided
(timeout or node limit).
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys

from . import certfile
from .cache import ResultCache, make_key
from .coloring import EdgeColoring
from .constructions import (bull_cycle_partition, disjoint_cliques_plus_one, extremal_plus_one,
                            k23_special, nested_blocks)
from .embeddings import canonical_code, enumerate_copies
from .formulas import classify, paper_tables
from .graphs import ForbiddenFamily, SmallGraph, graph_label, minus_edge_family, resolve, to_literal
from .search import SearchConfig, _decide, rb_exact, seed_certificate, turan_exact

OK, FAILED, USAGE, UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _graph(text: str) -> SmallGraph:
    try:
        return resolve(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def split_graph_list(text: str) -> list[str]:
    """Split ``C3,C4,K2,3`` into tags, keeping the comma inside ``K2,3`` / ``K_{2,3}``."""
    tokens = [t.strip() for t in re.split(r"[;,]", text) if t.strip()]
    out = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if (i + 1 < len(tokens) and re.fullmatch(r"K_?\{?\d+", tok, re.I)
                and re.fullmatch(r"\d+\}?(\+e)?", tokens[i + 1])):
            tok = f"{tok},{tokens[i + 1]}"
            i += 1
        out.append(tok)
        i += 1
    return out


def _published_value(target: SmallGraph, n: int):
    tables = paper_tables()
    for tag in ("bull", "diamond", "house", "K2,3"):
        if canonical_code(resolve(tag)) == canonical_code(target):
            return tables.rb_value(tag, n)
    return None


def _config(args) -> SearchConfig:
    kw = {"timeout": args.timeout}
    if args.workers:
        kw["worker_count"] = args.workers
    if getattr(args, "node_limit", None):
        kw["node_limit"] = args.node_limit
    return SearchConfig(**kw)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _compute(n, target, args):
    """rb search with cache lookup. Returns the outcome (status may be ``cached``)."""
    key = make_key("f", n, [canonical_code(target)])
    cache = None if args.no_cache else ResultCache(args.cache_dir)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    out = rb_exact(n, target, _config(args))
    if cache is not None:
        cache.put(key, n, out)
    return out


def cmd_compute(args) -> int:
    target = _graph(args.target)
    if target.order > args.n:
        raise UsageError(f"target has {target.order} vertices, more than n={args.n}")
    out = _compute(args.n, target, args)
    published = _published_value(target, args.n)
    payload = {
        "kind": "rb", "n": args.n, "target": graph_label(target), "rb": out.rb, "f": out.value,
        "status": out.status, "nodes": out.nodes_explored, "elapsed": round(out.elapsed, 3),
        "witness": list(out.witness.colors) if out.witness is not None else None,
        "provenance": {"computed": out.rb if out.status in ("exact", "cached") else None,
                       "lower_bound": out.rb, "published": published},
    }
    if out.status in ("exact", "cached"):
        text = f"rb(K_{args.n}, {graph_label(target)}) = {out.rb}   [{out.status}]"
    else:
        text = f"rb(K_{args.n}, {graph_label(target)}) >= {out.rb}   [{out.status}]"
    if published is not None:
        text += f"   published: {published}"
    _emit(args, payload, text)
    return OK if out.status in ("exact", "cached") else UNDECIDED


def cmd_decide(args) -> int:
    target = _graph(args.target)
    if target.order > args.n:
        raise UsageError(f"target has {target.order} vertices, more than n={args.n}")
    status, coloring, nodes = _decide(args.n, target, args.colors, _config(args))
    payload = {"n": args.n, "target": graph_label(target), "colors": args.colors, "result": status,
               "nodes": nodes, "witness": list(coloring.colors) if coloring else None}
    text = status if coloring is None else f"{status}: {','.join(map(str, coloring.colors))}"
    _emit(args, payload, text)
    return UNDECIDED if status == "unknown" else OK


def cmd_verify(args) -> int:
    try:
        cert = certfile.read(args.file)
    except (OSError, certfile.CertificateFormatError) as exc:
        _emit(args, {"valid": False, "error": str(exc)}, f"invalid certificate: {exc}")
        return FAILED
    problems = []
    if cert.claimed_colors != cert.coloring.color_count:
        problems.append(f"claimed {cert.claimed_colors} colors, coloring uses {cert.coloring.color_count}")
    bad = cert.rainbow_copy()
    vertices = None
    if bad is not None:
        table = enumerate_copies(cert.n, cert.target)
        vertices = list(table.vertices_of(bad))
        edges = ",".join(f"{i}-{j}" for i, j in table.edge_list(bad))
        problems.append(f"rainbow copy on vertices {vertices} (edges {edges})")
    payload = {"valid": not problems, "n": cert.n, "target": graph_label(cert.target),
               "claimed_colors": cert.claimed_colors, "colors": cert.coloring.color_count,
               "construction_tag": cert.construction_tag, "problems": problems,
               "rainbow_vertices": vertices}
    if problems:
        _emit(args, payload, "REJECTED: " + "; ".join(problems))
        return FAILED
    _emit(args, payload, f"OK: {cert.claimed_colors} colors on K_{cert.n}, "
                         f"no rainbow {graph_label(cert.target)} ({cert.construction_tag})")
    return OK


def _family_arg(text) -> ForbiddenFamily:
    return ForbiddenFamily(_graph(t) for t in split_graph_list(text))


def cmd_construct(args) -> int:
    target = _graph(args.target)
    method = args.method
    try:
        if method == "cycle-partition":
            if target != resolve("bull"):
                raise UsageError("cycle-partition is a bull construction")
            cert = bull_cycle_partition(args.n)
        elif method.startswith(("cliques=", "nested=")):
            kind, _, sizes = method.partition("=")
            parts = [int(s) for s in sizes.split(",") if s]
            build = disjoint_cliques_plus_one if kind == "cliques" else nested_blocks
            cert = build(args.n, parts, target)
        elif method == "k23-special":
            cert = k23_special(args.n)
        elif method == "extremal-plus-one":
            fam = _family_arg(args.forbid) if args.forbid else minus_edge_family(target)
            cert = extremal_plus_one(args.n, fam, target, cfg=_config(args))
        else:
            raise UsageError(f"unknown method {method!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = certfile.dumps(cert)
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    ok = cert.verify()
    if args.output and args.output != "-":
        print(f"{'wrote' if ok else 'wrote UNVERIFIED'} {args.output}: {cert.claimed_colors} colors",
              file=sys.stderr)
    return OK if ok else FAILED


def cmd_turan(args) -> int:
    fam = _family_arg(args.forbid)
    out = turan_exact(args.n, fam, _config(args))
    names = [graph_label(g) for g in fam.members]
    payload = {"kind": "ext", "n": args.n, "family": names, "ext": out.value, "status": out.status,
               "witness": to_literal(out.witness), "nodes": out.nodes_explored,
               "elapsed": round(out.elapsed, 3)}
    if {resolve("C3"), resolve("C4")} == set(fam.members):
        payload["published"] = paper_tables().ext_c3_c4.get(args.n)
    rel = "=" if out.exact else ">="
    _emit(args, payload, f"ext({args.n}, {{{', '.join(names)}}}) {rel} {out.value}   [{out.status}]")
    return OK if out.exact else UNDECIDED


def cmd_classify(args) -> int:
    target = _graph(args.target)
    cl = classify(target)
    rows = []
    for n in range(max(args.n_min, target.order), args.n_max + 1):
        lo, hi = cl.bounds(n)
        if lo is not None or hi is not None:
            rows.append({"n": n, "lower": lo, "upper": hi})
    payload = {"target": graph_label(target), "kind": cl.kind, "notes": cl.notes, "bounds": rows}
    lines = [f"{graph_label(target)}: {cl.kind} ({cl.notes})"]
    lines += [f"  n={r['n']}: {r['lower']} <= rb <= {r['upper']}" for r in rows]
    _emit(args, payload, "\n".join(lines))
    return OK


def cmd_table(args) -> int:
    target = _graph(args.target)
    rows = []
    undecided = False
    for n in range(max(args.n_min, target.order), args.n_max + 1):
        cert = seed_certificate(n, target)
        out = _compute(n, target, args)
        published = _published_value(target, n)
        exact = out.status in ("exact", "cached")
        undecided |= not exact
        rows.append({"n": n, "rb": out.rb if exact else None, "status": out.status,
                     "certificate_lower_bound": cert.claimed_colors + 1 if cert else None,
                     "search_lower_bound": out.rb, "published": published,
                     "matches_published": (out.rb == published) if exact and published is not None else None})
    payload = {"target": graph_label(target), "rows": rows}
    lines = [f"{'n':>3} {'rb':>6} {'cert':>5} {'pub.':>6}  status"]
    for r in rows:
        rb = str(r["rb"]) if r["rb"] is not None else f">={r['search_lower_bound']}"
        published = "" if r["published"] is None else str(r["published"])
        flag = "" if r["matches_published"] is None else ("  match" if r["matches_published"] else "  MISMATCH")
        lines.append(f"{r['n']:>3} {rb:>6} {r['certificate_lower_bound']:>5} {published:>6}  {r['status']}{flag}")
    _emit(args, payload, "\n".join(lines))
    if any(r["matches_published"] is False for r in rows):
        return FAILED
    return UNDECIDED if undecided else OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--timeout", type=float, default=300.0, help="seconds (default 300)")
    search.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    search.add_argument("--node-limit", type=int, default=None)
    search.add_argument("--no-cache", action="store_true")
    search.add_argument("--cache-dir", default=None, help="overrides $ANTIRAMSEY_CACHE_DIR")

    p = argparse.ArgumentParser(prog="antiramsey", description="Exact anti-Ramsey numbers of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("compute", parents=[common, search], help="exact rb(K_n, G)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--target", required=True)
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("decide", parents=[common, search], help="is there a K-coloring with no rainbow G?")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--colors", type=int, required=True)
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("verify", parents=[common], help="check a certificate file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", parents=[common, search], help="write a certificate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--target", required=True)
    s.add_argument("--method", required=True,
                   help="cycle-partition | cliques=S1,S2,.. | nested=S1,.. | k23-special | extremal-plus-one")
    s.add_argument("--forbid", default=None, help="family for extremal-plus-one (default: target minus an edge)")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("turan", parents=[common, search], help="exact ext(n, family)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--forbid", required=True, help="comma-separated graphs, e.g. C3,C4")
    s.set_defaults(func=cmd_turan)

    s = sub.add_parser("classify", parents=[common], help="cyclomatic classification and bounds")
    s.add_argument("--target", required=True)
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=10)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("table", parents=[common, search], help="rb for a range of n vs. published values")
    s.add_argument("--target", required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.set_defaults(func=cmd_table)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "verbose", False):
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"antiramsey: error: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())
