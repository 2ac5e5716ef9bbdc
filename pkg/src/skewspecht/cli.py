"""Command-line front end.

    skewspecht character --e 2 --charge 0 --outer 2,1
    skewspecht garnir --e 2 --charge 1 --outer 11,10,7,2,2 --inner 7,4,3,1 --node 2,6
    skewspecht cuspidal --e 3 --root a1+a2
    skewspecht check --suite filtration --max-size 6

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Any, Optional

from .characters import join_report, restrict, specht_character
from .cuspidal import CuspidalResult, cuspidal_shape, cuspidal_table
from .diagrams import Node, SkewShape, parse_charge, parse_multipartition
from .errors import DomainError, ParseError
from .garnir import check_garnir_degree_lemma, check_garnir_set, garnir_belt, garnir_set, garnir_tableau
from .preorders import PreorderSpec, check_balanced, check_convexity, compare, minimal_pairs
from .root_system import check_e, parse_root, parse_root_vector, positive_roots_up_to_height
from .sweeps import SUITES, SweepConfig
from .tableaux import degree, enumerate_standard, render_tableau, residue_sequence

COMMANDS = ("character", "restrict", "join", "garnir", "cuspidal", "table", "check", "preorder")


class UsageError(Exception):
    """Bad command line; carries the usage text."""

    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


@dataclass
class Config:
    e: int = 2
    charge: tuple[int, ...] = (0,)
    preorder: Optional[PreorderSpec] = None
    output: str = "text"
    threads: int = 1

    def __post_init__(self):
        check_e(self.e)
        if any(not 0 <= k < self.e for k in self.charge):
            raise DomainError(f"charge entries must lie in 0..{self.e - 1}, got {self.charge}")
        if self.preorder is None:
            self.preorder = PreorderSpec.erow(self.e)


@dataclass
class Command:
    name: str
    args: dict[str, Any] = field(default_factory=dict)


@dataclass
class Report:
    """What a command produced: a JSON-able payload, its text rendering and the exit status."""

    payload: dict
    text: str
    status: int = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--e", type=int, default=2)
    common.add_argument("--charge", default="0")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--preorder", choices=("erow",), default="erow")

    shape = _Parser(add_help=False)
    shape.add_argument("--outer", required=True)
    shape.add_argument("--inner", default="")

    parser = _Parser(prog="skewspecht", description="Graded characters of skew Specht modules "
                                                    "and cuspidal modules in affine type A.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("character", parents=[common, shape], help="graded character of a skew shape")
    p.add_argument("--show-tableaux", action="store_true")
    p = sub.add_parser("restrict", parents=[common, shape], help="restrict a character to a split")
    p.add_argument("--alpha", required=True, help="left content, e.g. a0+a1 or 1,1,0")
    sub.add_parser("join", parents=[common, shape], help="join a two-component shape")
    p = sub.add_parser("garnir", parents=[common, shape], help="Garnir belt, bricks and checks")
    p.add_argument("--node", required=True, help="row,col[,comp]")
    p = sub.add_parser("cuspidal", parents=[common], help="cuspidal shape of a real root")
    p.add_argument("--root", required=True)
    p = sub.add_parser("table", parents=[common], help="cuspidal catalogue up to a height")
    p.add_argument("--max-height", type=int, default=8)
    p = sub.add_parser("check", parents=[common], help="run verification sweeps")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--max-height", type=int, default=8)
    p.add_argument("--es", default="2,3", help="comma list of e values for sweeps")
    p = sub.add_parser("preorder", parents=[common], help="preorder health and minimal pairs")
    p.add_argument("--root", default=None)
    p.add_argument("--max-height", type=int, default=8)
    return parser


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return parse_charge(text)
    except ParseError as exc:
        raise ParseError(f"malformed {what}", exc.text, exc.position) from None


def parse_invocation(argv: list[str]) -> tuple[Config, Command]:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    charge = _parse_int_list(ns.charge, "charge")
    threads = 1
    raw = os.environ.get("SPECHT_THREADS", "")
    if raw.isdigit() and int(raw) > 0:
        threads = int(raw)
    try:
        cfg = Config(ns.e, tuple(charge), None, ns.format, threads)
    except DomainError as exc:
        raise UsageError(str(exc), parser.format_usage()) from None
    args = {k: v for k, v in vars(ns).items() if k not in ("command", "e", "charge", "format", "preorder")}
    if "outer" in args:
        outer = parse_multipartition(args.pop("outer"), "outer")
        inner = parse_multipartition(args.pop("inner"), "inner") if args.get("inner") else ((),) * len(charge)
        args.pop("inner", None)
        if len(outer) != len(charge):
            raise UsageError(f"outer has {len(outer)} components but charge has {len(charge)}",
                             parser.format_usage())
        args["shape"] = SkewShape(outer, inner, charge, cfg.e)
    if args.get("root") is not None:
        args["root"] = parse_root(args["root"], cfg.e)
    if "alpha" in args:
        args["alpha"] = parse_root_vector(args["alpha"], cfg.e)
    if "node" in args:
        node = _parse_int_list(args["node"], "node")
        if len(node) not in (2, 3):
            raise ParseError("node needs row,col or row,col,comp", args["node"], 0)
        args["node"] = Node(*node)
    if "es" in args:
        args["es"] = _parse_int_list(args["es"], "e list")
    return cfg, Command(ns.command, args)


# -- rendering ------------------------------------------------------------------

def render_shape(shape: SkewShape) -> str:
    """ASCII diagram: residues on skew nodes, ``.`` on inner nodes; components separated by a blank line."""
    blocks = []
    for m in range(1, shape.level + 1):
        lam, mu = shape.outer[m - 1], shape.inner[m - 1]
        rows = []
        for r, length in enumerate(lam, start=1):
            inner = mu[r - 1] if r <= len(mu) else 0
            cells = ["." if c <= inner else str(shape.residue(Node(r, c, m))) for c in range(1, length + 1)]
            rows.append(" ".join(cells))
        blocks.append("\n".join(rows) if rows else "(empty)")
    return "\n\n".join(blocks)


def _cuspidal_text(r: CuspidalResult) -> str:
    return (f"root: {r.root.spelling()}\nshape: {r.shape}\n{render_shape(r.shape)}\n"
            f"shift: {r.shift}\ncharacter: {r.character}")


# -- commands -------------------------------------------------------------------

def _character(cfg: Config, a: dict) -> Report:
    shape = a["shape"]
    ch = specht_character(shape)
    payload = {"shape": shape.to_json(), "character": ch.to_json()}
    lines = [str(shape), render_shape(shape), f"character: {ch}"]
    if a.get("show_tableaux"):
        tabs = []
        for t in enumerate_standard(shape):
            tabs.append({"entries": list(t.entries), "degree": degree(t), "word": list(residue_sequence(t))})
            lines.append(f"{render_tableau(t)}\n  degree {degree(t)}, word {residue_sequence(t)}")
        payload["tableaux"] = tabs
    return Report(payload, "\n".join(lines))


def _restrict(cfg: Config, a: dict) -> Report:
    shape, alpha = a["shape"], a["alpha"]
    ch = specht_character(shape)
    beta = ch.content - alpha
    if not beta.is_nonnegative():
        raise DomainError(f"alpha {alpha.coeffs} exceeds the content {ch.content.coeffs}")
    res = restrict(ch, alpha, beta)
    items = sorted(res.items())
    payload = {"shape": shape.to_json(), "alpha": list(alpha.coeffs), "beta": list(beta.coeffs),
               "terms": [{"left": list(u), "right": list(v), "poly": p.to_json()} for (u, v), p in items]}
    text = "\n".join(f"({p}) * ({' '.join(map(str, u))}) ⊗ ({' '.join(map(str, v))})" for (u, v), p in items)
    return Report(payload, text or "0")


def _join(cfg: Config, a: dict) -> Report:
    rep = join_report(a["shape"])
    payload = {"shape": rep.shape.to_json(), "above": rep.above.to_json(), "right": rep.right.to_json(),
               "d_above": rep.d_above, "d_right": rep.d_right, "d_shift": rep.d_shift,
               "split_ok": rep.split_ok, "shuffle_ok": rep.shuffle_ok, "bijection_ok": rep.bijection_ok}
    text = (f"shape: {rep.shape}\nabove: {rep.above}  (d* = {rep.d_above})\n{render_shape(rep.above)}\n"
            f"right: {rep.right}  (d_* = {rep.d_right})\n{render_shape(rep.right)}\n"
            f"shuffle shift: {rep.d_shift}\n"
            f"split identity: {rep.split_ok}, shuffle identity: {rep.shuffle_ok}, "
            f"degree bijection: {rep.bijection_ok}")
    return Report(payload, text, 0 if rep.ok else 1)


def _garnir(cfg: Config, a: dict) -> Report:
    shape, node = a["shape"], a["node"]
    data = garnir_belt(shape, node)
    g = garnir_tableau(shape, node)
    members = garnir_set(shape, node)
    lemma, set_ok = check_garnir_degree_lemma(shape, node), check_garnir_set(shape, node)
    payload = {"node": list(data.node), "belt": [list(n) for n in data.belt],
               "bricks": [[list(n) for n in br] for br in data.bricks], "k": data.k, "f": data.f,
               "garnir_tableau": list(g.entries), "garnir_set": [list(t.entries) for t in members],
               "degree_lemma": lemma, "set_equality": set_ok}
    text = (f"node {tuple(data.node)}: belt size {len(data.belt)}, k={data.k}, f={data.f}\n"
            f"bricks: {[[tuple(n)[:2] for n in br] for br in data.bricks]}\n"
            f"g^A:\n{render_tableau(g)}\n|Gar^A| = {len(members)}\n"
            f"degree lemma: {lemma}\nset equality: {set_ok}")
    return Report(payload, text, 0 if lemma and set_ok else 1)


def _cuspidal(cfg: Config, a: dict) -> Report:
    r = cuspidal_shape(a["root"], cfg.preorder)
    return Report(r.to_json(), _cuspidal_text(r))


def _table(cfg: Config, a: dict) -> Report:
    rows = cuspidal_table(cfg.preorder, a["max_height"])
    payload = {"e": cfg.e, "preorder": cfg.preorder.name, "max_height": a["max_height"],
               "entries": [r.to_json() for r in rows]}
    text = "\n\n".join(_cuspidal_text(r) for r in rows)
    return Report(payload, text)


def _check(cfg: Config, a: dict) -> Report:
    names = sorted(SUITES) if a["suite"] == "all" else [a["suite"]]
    sc = SweepConfig(max_size=a["max_size"], max_height=a["max_height"], es=a["es"], threads=cfg.threads)
    results = [SUITES[n](sc) for n in names]
    payload = {"results": [r.to_json() for r in results]}
    text = "\n".join(f"{r.suite}: {r.summary()}" for r in results)
    return Report(payload, text, 0 if all(r.passed for r in results) else 1)


def _preorder(cfg: Config, a: dict) -> Report:
    p = cfg.preorder
    convex, balanced = check_convexity(p, a["max_height"]), check_balanced(p, a["max_height"])
    payload: dict = {"e": cfg.e, "name": p.name, "max_height": a["max_height"],
                     "convex": convex, "balanced": balanced}
    lines = [f"{p.name} (e={cfg.e}) up to height {a['max_height']}: convex {convex}, balanced {balanced}"]
    ranked = sorted(positive_roots_up_to_height(a["max_height"], cfg.e),
                    key=cmp_to_key(lambda r, s: int(compare(p, r, s))), reverse=True)
    payload["descending"] = [r.spelling() for r in ranked]
    lines.append("descending: " + " > ".join(r.spelling() for r in ranked))
    if a.get("root") is not None:
        rho = a["root"]
        pairs = minimal_pairs(p, rho)
        payload["root"] = rho.spelling()
        payload["minimal_pairs"] = [[mp.beta.spelling(), mp.gamma.spelling()] for mp in pairs]
        for mp in pairs:
            lines.append(f"minimal pair for {rho.spelling()}: ({mp.beta.spelling()}, {mp.gamma.spelling()})"
                         + ("" if mp.real else "  [imaginary part]"))
    return Report(payload, "\n".join(lines), 0 if convex and balanced else 1)


_DISPATCH = {"character": _character, "restrict": _restrict, "join": _join, "garnir": _garnir,
             "cuspidal": _cuspidal, "table": _table, "check": _check, "preorder": _preorder}


def execute(cmd: Command, cfg: Config) -> Report:
    return _DISPATCH[cmd.name](cfg, cmd.args)


def serialize(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report.payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
                + "\n").encode()
    return (report.text + "\n").encode()


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg, cmd = parse_invocation(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc.usage}error: {exc}\n")
        return 2
    except (ParseError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    try:
        report = execute(cmd, cfg)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.buffer.write(serialize(report, cfg.output))
    sys.stdout.flush()
    return report.status


if __name__ == "__main__":
    raise SystemExit(main())
