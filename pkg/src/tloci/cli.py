"""
The ``tloci`` command.

Usage examples
--------------
  tloci perm info --window 0,8,10
  tloci perm compare --window 0,8,10 --other 8,0,10
  tloci words count --window 5,3,-5
  tloci words graph --window 5,3,-5 --format dot
  tloci loci poset --window 0,8,10 --g 8 --format dot
  tloci strata schedule --window 10,8,0 --word "0 1 0 2 1 0 2 1" --g 8 --format tsv
  tloci hurwitz standardize --tuple "k=6;(0,2)(2,5)" --witness
  tloci hurwitz orbits --k 4 --g 1

Exit status is 0 on success, 1 when the input is well formed but violates a
mathematical precondition, and 2 for usage errors. Diagnostics go to stderr.
Setting TLOCI_COLOR=1 colours them.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from dataclasses import dataclass
from itertools import islice
from typing import Callable

from . import affine_perm as ap
from . import degeneration as dg
from . import demazure as dm
from . import hurwitz as hz
from . import loci as lc
from . import twists as tw
from . import words as wd


NEGATIVE_LIST = re.compile(r"^-\d+(,|$)")


@dataclass(frozen=True)
class CommandResult:
    status: int
    payload: str
    error: str = ""
    out: str | None = None


class UsageError(Exception):
    """Malformed arguments detected after argparse has finished."""


class _ParseFailure(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting, so run() can report status 2 itself."""

    def error(self, message: str):
        raise _ParseFailure(message)


# ---------------------------------------------------------------------------
#  argument types
# ---------------------------------------------------------------------------

def window_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed window {text!r}; expected e.g. 0,8,10")
    return values


def tuple_arg(text: str) -> tuple[int, list[tuple[int, int]]]:
    try:
        return hz.parse_text(text)
    except hz.TupleSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def letters_arg(text: str) -> str:
    for token in text.replace(",", " ").split():
        if token not in (dg.BULLET, "*", ".") and not token.lstrip("-").isdigit():
            raise argparse.ArgumentTypeError(f"malformed letter {token!r} in word {text!r}")
    return text


def _perm(args: argparse.Namespace, attr: str = "window") -> ap.AffinePermutation:
    window = getattr(args, attr)
    k = args.k if args.k is not None else len(window)
    return ap.from_window(k, window)


# ---------------------------------------------------------------------------
#  renderers
# ---------------------------------------------------------------------------

def to_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def to_tsv(header: list[str], rows: list[list]) -> str:
    lines = ["\t".join(header)] if header else []
    lines += ["\t".join("" if x is None else str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(name: str, labels: list[str], edges: list[tuple[int, int, str]], directed: bool) -> str:
    kind, arrow = ("digraph", "->") if directed else ("graph", "--")
    out = [f"{kind} {_dot_quote(name)} {{"]
    for n, label in enumerate(labels):
        out.append(f"  n{n} [label={_dot_quote(label)}];")
    for s, t, label in edges:
        attr = f" [label={_dot_quote(label)}]" if label else ""
        out.append(f"  n{s} {arrow} n{t}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def _unsupported(fmt: str, verb: str) -> None:
    raise UsageError(f"format {fmt!r} is not available for {verb}")


# ---------------------------------------------------------------------------
#  perm
# ---------------------------------------------------------------------------

def cmd_perm_info(args) -> str:
    tau = _perm(args)
    count, reps = wd.k_inversions(tau)
    doc = {
        **tau.to_json(), "inv": count,
        "inversions": [list(r) for r in reps],
        "deviation": ap.deviation(tau),
        "essential_set": [list(c) for c in sorted(dm.essential_set(tau))],
    }
    if args.format == "tsv":
        return to_tsv(["key", "value"], [[key, json.dumps(v)] for key, v in doc.items()])
    if args.format != "json":
        _unsupported(args.format, "perm info")
    return to_json(doc)


def cmd_perm_slipface(args) -> str:
    tau = _perm(args)
    lo = args.a_min if args.a_min is not None else min(tau.window) - tau.k
    hi = args.a_max if args.a_max is not None else max(tau.window) + tau.k
    if lo > hi:
        raise UsageError(f"empty range a in [{lo}, {hi}]")
    rows = []
    for b in range(tau.k):
        for a in range(lo, hi + 1):
            s, h = ap.slipface(tau, a, b)
            rows.append([a, b, s, h])
    if args.format == "tsv":
        return to_tsv(["a", "b", "s", "h"], rows)
    if args.format != "json":
        _unsupported(args.format, "perm slipface")
    return to_json({
        "permutation": tau.to_json(),
        "cells": [dict(zip(("a", "b", "s", "h"), r)) for r in rows],
    })


def cmd_perm_demazure(args) -> str:
    tau = _perm(args)
    if (args.other is None) == (args.reflection is None):
        raise UsageError("give exactly one of --other and --reflection")
    if args.reflection is not None:
        right = ap.simple_reflection(tau.k, args.reflection)
        product = dm.demazure_reflection(tau, args.reflection)
    else:
        right = ap.from_window(tau.k, args.other)
        product = dm.demazure_product(tau, right)
    doc = {
        "left": tau.to_json(), "right": right.to_json(), "product": product.to_json(),
        "ordinary_product": ap.compose(tau, right).to_json(),
    }
    if args.format == "tsv":
        return to_tsv(["role", "window", "chi"], [
            [role, ",".join(map(str, d["window"])), d["chi"]] for role, d in doc.items()
        ])
    if args.format != "json":
        _unsupported(args.format, "perm demazure")
    return to_json(doc)


def cmd_perm_compare(args) -> str:
    alpha = _perm(args)
    beta = ap.from_window(alpha.k, args.other)
    witness = dm.bruhat_witness(alpha, beta)
    doc = {
        "alpha": alpha.to_json(), "beta": beta.to_json(),
        "leq": witness is None,
        "witness": None if witness is None else {
            "a": witness.a, "b": witness.b,
            "shift_mismatch": alpha.chi != beta.chi,
            "s_alpha": ap.slipface(alpha, witness.a, witness.b)[0],
            "s_beta": ap.slipface(beta, witness.a, witness.b)[0],
        },
    }
    if args.format == "tsv":
        w = doc["witness"] or {}
        return to_tsv(["leq", "a", "b"], [[str(doc["leq"]).lower(), w.get("a"), w.get("b")]])
    if args.format != "json":
        _unsupported(args.format, "perm compare")
    return to_json(doc)


# ---------------------------------------------------------------------------
#  words
# ---------------------------------------------------------------------------

def _core(args) -> ap.AffinePermutation:
    tau = _perm(args)
    return wd.normalize_to_core(tau) if args.normalize else tau


def cmd_words_list(args) -> str:
    alpha = _core(args)
    words = list(islice(wd.reduced_words(alpha), args.limit))
    if args.format == "tsv":
        return to_tsv(["application_order", "display"], [
            [" ".join(map(str, w.letters)), w.display()] for w in words
        ])
    if args.format != "json":
        _unsupported(args.format, "words list")
    return to_json({
        "alpha": alpha.to_json(), "limit": args.limit,
        "words": [{**w.to_json(), "display": w.display()} for w in words],
    })


def cmd_words_count(args) -> str:
    alpha = _core(args)
    count = wd.count_reduced_words(alpha)
    if args.format == "tsv":
        return f"{count}\n"
    if args.format != "json":
        _unsupported(args.format, "words count")
    return to_json({"alpha": alpha.to_json(), "inv": wd.inversion_count(alpha), "count": count})


def cmd_words_graph(args) -> str:
    alpha = _core(args)
    graph = wd.braid_graph(alpha)
    labels = [w.display() or "e" for w in graph.vertices]
    if args.format == "dot":
        return to_dot(f"braid graph {alpha}", labels,
                      [(s, t, f"{kind} {i}") for s, t, kind, i in graph.edges], directed=False)
    if args.format == "tsv":
        return to_tsv(["source", "target", "kind", "position"], [list(e) for e in graph.edges])
    if args.format != "json":
        _unsupported(args.format, "words graph")
    return to_json({
        "alpha": alpha.to_json(), "connected": graph.connected,
        "vertices": [list(w.letters) for w in graph.vertices],
        "edges": [{"source": s, "target": t, "kind": kind, "position": i}
                  for s, t, kind, i in graph.edges],
    })


# ---------------------------------------------------------------------------
#  twists
# ---------------------------------------------------------------------------

def cmd_twists_show(args) -> str:
    tau = _perm(args)
    ts = tw.essential_twists(tau)
    rows = []
    for j, a, e in ts.entries:
        rows.append({
            "j": j, "tau": a, "e": e,
            "budget": tw.new_section_budget(tau, j),
            "budget_closed_form": tw.new_section_budget_rhs(tau, j),
            "below": ts.below(j),
        })
    lhs, rhs = tw.inversion_identity(tau)
    if args.format == "tsv":
        table = to_tsv(["j", "tau", "e", "budget", "budget_closed_form"],
                       [[r["j"], r["tau"], r["e"], r["budget"], r["budget_closed_form"]] for r in rows])
        return table + f"# sum_h\t{lhs}\n# inv\t{rhs}\n"
    if args.format != "json":
        _unsupported(args.format, "twists show")
    return to_json({"tau": tau.to_json(), "twists": rows,
                    "inversion_identity": {"sum_h": lhs, "inv": rhs}})


# ---------------------------------------------------------------------------
#  loci
# ---------------------------------------------------------------------------

def cmd_loci_profile(args) -> str:
    profile = lc.locus_profile(_perm(args), args.g)
    doc = profile.to_json()
    if args.format == "tsv":
        return to_tsv(["key", "value"], [[key, json.dumps(v)] for key, v in doc.items()])
    if args.format != "json":
        _unsupported(args.format, "loci profile")
    return to_json(doc)


def cmd_loci_covers(args) -> str:
    tau = _perm(args)
    covers = lc.codim1_covers(tau)
    rows = [[",".join(map(str, c.tau_prime.window)), c.j_minus, c.j_plus, c.delta] for c in covers]
    if args.format == "tsv":
        return to_tsv(["tau_prime", "j_minus", "j_plus", "delta"], rows)
    if args.format != "json":
        _unsupported(args.format, "loci covers")
    return to_json({"tau": tau.to_json(), "covers": [
        {"tau_prime": c.tau_prime.to_json(), "j_minus": c.j_minus, "j_plus": c.j_plus,
         "delta": c.delta} for c in covers
    ]})


def cmd_loci_poset(args) -> str:
    poset = lc.shuffle_poset(_perm(args), args.g)
    edges = poset.swap_edges if args.edges == "swap" else poset.hasse_edges
    if args.format == "dot":
        labels = [f"{node} dim {d}" for node, d in zip(poset.nodes, poset.dims)]
        return to_dot(f"shuffle poset g={args.g}", labels,
                      [(s, t, "") for s, t in edges], directed=True)
    if args.format == "tsv":
        return to_tsv(["larger", "smaller"], [
            [",".join(map(str, poset.nodes[s].window)), ",".join(map(str, poset.nodes[t].window))]
            for s, t in edges
        ])
    if args.format != "json":
        _unsupported(args.format, "loci poset")
    return to_json({
        "g": args.g, "edge_kind": args.edges,
        "nodes": [{"window": list(n.window), "dim": d} for n, d in zip(poset.nodes, poset.dims)],
        "edges": [list(e) for e in edges],
    })


def cmd_loci_splitting(args) -> str:
    tau = _perm(args)
    st = lc.splitting_type(tau)
    doc = {"tau": tau.to_json(), "splitting_type": list(st.e),
           "codim": lc.splitting_codim(st), "inv": wd.inversion_count(tau)}
    if args.format == "tsv":
        return to_tsv(["splitting_type", "codim", "inv"],
                      [[",".join(map(str, st.e)), doc["codim"], doc["inv"]]])
    if args.format != "json":
        _unsupported(args.format, "loci splitting")
    return to_json(doc)


# ---------------------------------------------------------------------------
#  strata
# ---------------------------------------------------------------------------

def _filled_word(args) -> dg.FilledWord:
    tau = _perm(args)
    fw = dg.FilledWord.parse(tau, args.word)
    if args.g is not None and args.g != fw.g:
        raise ValueError(f"word has length {fw.g} but --g is {args.g}")
    return fw


def cmd_strata_list(args) -> str:
    tau = _perm(args)
    items = list(islice(dg.strata(tau, args.g), args.limit))
    if args.format == "tsv":
        return to_tsv(["letters", "S"], [[fw.serialize(), ",".join(map(str, fw.support))]
                                        for fw in items])
    if args.format != "json":
        _unsupported(args.format, "strata list")
    return to_json({"tau": tau.to_json(), "g": args.g, "total": dg.count_strata(tau, args.g),
                    "limit": args.limit, "strata": [fw.to_json() for fw in items]})


def cmd_strata_schedule(args) -> str:
    fw = _filled_word(args)
    d = fw.tau.chi + fw.g
    sched = dg.ramification_schedule(fw, d)
    fmt = args.format or "tsv"
    if fmt == "tsv":
        return sched.to_tsv()
    if fmt != "json":
        _unsupported(fmt, "strata schedule")
    return to_json({"filled_word": fw.to_json(), "d": d,
                    "a": [list(r) for r in sched.a], "b": [list(r) for r in sched.b]})


def cmd_strata_dist(args) -> str:
    fw = _filled_word(args)
    d = fw.tau.chi + fw.g
    dist = dg.degree_distribution(fw, args.j, d)
    dg.distribution_checks(fw, args.j, d)
    if args.format == "tsv":
        return to_tsv(["i", "degree", "class"], [
            [i, x, c] for i, (x, c) in enumerate(zip(dist.d_vec, dist.classes), start=1)
        ])
    if args.format != "json":
        _unsupported(args.format, "strata dist")
    return to_json({"filled_word": fw.to_json(), "d": d, "j": args.j,
                    "d_vec": list(dist.d_vec), "classes": list(dist.classes)})


# ---------------------------------------------------------------------------
#  hurwitz
# ---------------------------------------------------------------------------

def _tuple(args) -> hz.MonodromyTuple:
    return hz.validate_tuple(*args.tuple)


def cmd_hurwitz_classify(args) -> str:
    t = _tuple(args)
    d = hz.classify(t)
    std, _ = hz.standardize(t)
    if args.format == "tsv":
        return to_tsv(["tuple", "d", "standard"], [[hz.to_text(t), d, hz.to_text(std)]])
    if args.format != "json":
        _unsupported(args.format, "hurwitz classify")
    return to_json({"tuple": t.to_json(), "d": d, "invariant_d": hz.invariant_d(t),
                    "standard": std.to_json()})


def cmd_hurwitz_standardize(args) -> str:
    t = _tuple(args)
    std, moves = hz.standardize(t)
    witness = [str(m) for m in moves]
    if args.format == "tsv":
        rows = [["standard", hz.to_text(std)]]
        if args.witness:
            rows.append(["witness", " ".join(witness)])
        return to_tsv([], rows)
    if args.format != "json":
        _unsupported(args.format, "hurwitz standardize")
    doc = {"input": t.to_json(), "standard": std.to_json()}
    if args.witness:
        doc["witness"] = witness
    return to_json(doc)


def _sigma0(k: int) -> int:
    return sum(1 for e in range(1, k + 1) if k % e == 0)


def cmd_hurwitz_orbits(args) -> str:
    if args.k < 2 or args.g < 1:
        raise ValueError(f"orbit counts need k >= 2 and g >= 1, got k={args.k}, g={args.g}")
    orbits = hz.count_orbits(args.k, args.g)
    summary = [{"d": hz.invariant_d(hz.MonodromyTuple(args.k, o[0])), "size": len(o),
                "representative": hz.to_text(hz.MonodromyTuple(args.k, o[0]))} for o in orbits]
    summary.sort(key=lambda x: x["d"])
    if args.format == "tsv":
        return to_tsv(["d", "size", "representative"],
                      [[s["d"], s["size"], s["representative"]] for s in summary])
    if args.format != "json":
        _unsupported(args.format, "hurwitz orbits")
    return to_json({"k": args.k, "g": args.g, "count": len(orbits),
                    "expected": _sigma0(args.k) - 1, "orbits": summary})


def cmd_hurwitz_replay(args) -> str:
    t = _tuple(args)
    if (args.moves is None) == (args.random is None):
        raise UsageError("give exactly one of --moves and --random")
    if args.moves is not None:
        try:
            moves = hz.parse_moves(args.moves)
        except hz.HurwitzError as exc:
            raise UsageError(str(exc))
    else:
        rng = random.Random(args.seed)
        moves = []
        for _ in range(args.random):
            kind = rng.choice(["E1", "E2", "E3"] if t.r >= 2 else ["E1"])
            index = 0 if kind == "E1" else rng.randint(1, t.r - 1)
            moves.append(hz.Move(kind, index, rng.random() < 0.5))
    result = hz.replay(t, moves)
    if args.format == "tsv":
        return to_tsv([], [["result", hz.to_text(result)], ["moves", " ".join(map(str, moves))]])
    if args.format != "json":
        _unsupported(args.format, "hurwitz replay")
    return to_json({"input": t.to_json(), "moves": [str(m) for m in moves],
                    "result": result.to_json(), "invariant_d": hz.invariant_d(result)
                    if result.r else None})


# ---------------------------------------------------------------------------
#  parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tloci", description="Combinatorics of transmission loci and Hurwitz orbits.")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name: str, func: Callable, help_text: str, window: bool = True,
             formats=("json", "tsv"), default_format: str | None = "json"):
        p = group.add_parser(name, help=help_text, description=help_text)
        if window:
            p.add_argument("--window", type=window_arg, required=True,
                           help="window entries, comma separated, e.g. 0,8,10")
            p.add_argument("--k", type=int, default=None,
                           help="period; defaults to the window length")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=None, help="write output to this file")
        p.set_defaults(func=func)
        return p

    perm = groups.add_parser("perm", help="window arithmetic").add_subparsers(dest="verb", required=True)
    leaf(perm, "info", cmd_perm_info, "shift, inversions and essential set")
    p = leaf(perm, "slipface", cmd_perm_slipface, "slipface and h values on b in [0, k)")
    p.add_argument("--a-min", type=int, default=None)
    p.add_argument("--a-max", type=int, default=None)
    p = leaf(perm, "demazure", cmd_perm_demazure, "Demazure product with a window or a reflection")
    p.add_argument("--other", type=window_arg, default=None)
    p.add_argument("--reflection", type=int, default=None)
    p = leaf(perm, "compare", cmd_perm_compare, "Bruhat comparison with a witness cell")
    p.add_argument("--other", type=window_arg, required=True)

    words = groups.add_parser("words", help="reduced words").add_subparsers(dest="verb", required=True)
    for name, func, help_text, formats in (
        ("list", cmd_words_list, "stream reduced words", ("json", "tsv")),
        ("count", cmd_words_count, "count reduced words", ("json", "tsv")),
        ("graph", cmd_words_graph, "braid-move graph", ("json", "tsv", "dot")),
    ):
        p = leaf(words, name, func, help_text, formats=formats)
        p.add_argument("--normalize", action="store_true",
                       help="add the shift to the window first")
        if name == "list":
            p.add_argument("--limit", type=int, default=None)

    twists = groups.add_parser("twists", help="essential twists").add_subparsers(dest="verb", required=True)
    leaf(twists, "show", cmd_twists_show, "essential twist table and inversion identity")

    loci = groups.add_parser("loci", help="transmission loci").add_subparsers(dest="verb", required=True)
    p = leaf(loci, "profile", cmd_loci_profile, "emptiness, dimension and point count")
    p.add_argument("--g", type=int, required=True)
    leaf(loci, "covers", cmd_loci_covers, "codimension-one covers")
    p = leaf(loci, "poset", cmd_loci_poset, "shuffle poset of a sorted window",
             formats=("json", "tsv", "dot"))
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--edges", choices=("swap", "hasse"), default="swap",
                   help="adjacent-swap covers (default) or the full Hasse diagram")
    leaf(loci, "splitting", cmd_loci_splitting, "splitting type and its codimension")

    strata = groups.add_parser("strata", help="degeneration strata").add_subparsers(dest="verb", required=True)
    p = leaf(strata, "list", cmd_strata_list, "stream filled words")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p = leaf(strata, "schedule", cmd_strata_schedule, "ramification schedule",
             default_format=None)
    p.add_argument("--word", type=letters_arg, required=True,
                   help="letters in application order; use * or the bullet glyph for bullets")
    p.add_argument("--g", type=int, default=None)
    p = leaf(strata, "dist", cmd_strata_dist, "degree distribution for an index j")
    p.add_argument("--word", type=letters_arg, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--g", type=int, default=None)

    hur = groups.add_parser("hurwitz", help="monodromy tuples").add_subparsers(dest="verb", required=True)
    p = leaf(hur, "classify", cmd_hurwitz_classify, "orbit label d", window=False)
    p.add_argument("--tuple", type=tuple_arg, required=True, help='e.g. "k=6;(0,2)(2,5)"')
    p = leaf(hur, "standardize", cmd_hurwitz_standardize, "standard form", window=False)
    p.add_argument("--tuple", type=tuple_arg, required=True)
    p.add_argument("--witness", action="store_true", help="include the move list")
    p = leaf(hur, "orbits", cmd_hurwitz_orbits, "orbits of product-condition tuples", window=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p = leaf(hur, "replay", cmd_hurwitz_replay, "apply a move list", window=False)
    p.add_argument("--tuple", type=tuple_arg, required=True)
    p.add_argument("--moves", default=None, help='e.g. "E2(1) E3^-1(2) E1"')
    p.add_argument("--random", type=int, default=None, help="apply this many random moves")
    p.add_argument("--seed", type=int, default=0)
    return parser


def _colour(text: str) -> str:
    if os.environ.get("TLOCI_COLOR", "0") == "1":
        return f"\033[31m{text}\033[0m"
    return text


def _glue_negative(argv: list[str]) -> list[str]:
    """
    Rewrite ``--window -3,2,4`` as ``--window=-3,2,4``.

    argparse only recognises bare negative numbers as values, so a list whose
    first entry is negative would otherwise be mistaken for an option.
    """
    out: list[str] = []
    for token in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and NEGATIVE_LIST.match(token):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def run(argv: list[str]) -> CommandResult:
    """Parse argv and execute one command without touching stdout."""
    try:
        args = build_parser().parse_args(_glue_negative(list(argv)))
    except _ParseFailure as exc:
        return CommandResult(2, "", f"tloci: error: {exc}")
    try:
        payload = args.func(args)
    except UsageError as exc:
        return CommandResult(2, "", f"tloci: usage error: {exc}")
    except ValueError as exc:
        return CommandResult(1, "", f"tloci: error: {exc}")
    return CommandResult(0, payload, out=args.out)


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.error:
        print(_colour(result.error), file=sys.stderr)
    if result.status == 0:
        if result.out:
            with open(result.out, "w", encoding="utf-8") as fh:
                fh.write(result.payload)
        else:
            sys.stdout.write(result.payload)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
