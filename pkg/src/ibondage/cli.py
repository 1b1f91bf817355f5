"""Command-line front end.

Exit status: 0 success, 1 domain error, 2 theorem violation, 3 input/output
or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats
from .bondage import b_i_exact, bound_report
from .certify import certify_graph
from .configs import detect_for_class
from .discharge import RULESETS, Scheme, apply_rules, charge_table, initial_charges
from .domination import gamma_i
from .embedding import check_planar_embedding, compute_embedding, embedding_from_rotation
from .errors import DomainError, InputError, TheoremViolation
from .generate import class_spec, generate
from .graph import Graph

CLASSES = ("g5d2", "g4d3", "g7d2", "g10d2")


def _edges_text(edges) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


def _load(path: str, rotation: str | None, need_embedding: bool):
    """Graph plus embedding (or None). A ``.rot`` input supplies its own embedding."""
    if Path(path).suffix == ".rot":
        rot = formats.parse_rotation(formats.read_text(path))
        g = formats.graph_from_rotation(rot)
        return g, embedding_from_rotation(g, rot)
    g = formats.load_graph(path)
    if rotation is not None:
        return g, formats.load_embedding(rotation, g)
    return g, compute_embedding(g) if need_embedding else None


def _cmd_gamma_i(g: Graph, e, args) -> str:
    res = gamma_i(g)
    return f"gamma_i = {res.gamma_i}\nwitness = {' '.join(map(str, res.witness))}\n"


def _cmd_bondage(g: Graph, e, args) -> str:
    res = b_i_exact(g, cap=args.cap, prune=args.prune, jobs=args.jobs)
    if res.b_i is None:
        return f"b_i = NOT_FOUND_WITHIN_CAP\ncap = {res.cap}\ngamma_i = {res.gamma_before}\n"
    return (
        f"b_i = {res.b_i}\nwitness = {_edges_text(res.witness_edges)}\ncap = {res.cap}\n"
        f"gamma_i before = {res.gamma_before}\ngamma_i after = {res.gamma_after}\n"
    )


def _cmd_bounds(g: Graph, e, args) -> str:
    r = bound_report(g)
    u, v = r.priddy_wei_edge
    girth_row = "none" if r.girth_bound is None else str(r.girth_bound)
    return (
        f"priddy_wei = {r.priddy_wei} (edge {u}-{v})\n"
        f"delta_plus_2 = {r.delta_plus_2}\n"
        f"min9_delta_plus_2 = {r.min9_delta_plus_2} ({'applies' if r.min9_applicable else 'needs min degree 3'})\n"
        f"girth_bound = {girth_row}\n"
    )


def _cmd_detect(g: Graph, e, args) -> str:
    found = detect_for_class(g, e, args.klass)
    return "".join(w.to_line() + "\n" for w in found) + f"count = {len(found)}\n"


def _cmd_discharge(g: Graph, e, args) -> str:
    if args.rules is None and args.scheme is None:
        raise DomainError("discharge needs --rules, --scheme or both")
    scheme = Scheme(args.scheme) if args.scheme else RULESETS[args.rules].scheme
    start = initial_charges(e, scheme)
    end = apply_rules(start, args.rules, g, e) if args.rules else start
    return charge_table(start, end)


def _cmd_certify(g: Graph, e, args) -> str:
    return certify_graph(g, e, args.klass, jobs=args.jobs).to_text()


def _cmd_check_embedding(g: Graph, e, args) -> str:
    r = check_planar_embedding(e)
    lines = [f"vertices = {r.vertices}", f"edges = {r.edges}", f"faces = {r.faces}",
             f"euler = {r.vertices - r.edges + r.faces}", f"ok = {'yes' if r.ok else 'no'}"]
    lines += [f"failure: {msg}" for msg in r.failures]
    return "\n".join(lines) + "\n"


COMMANDS = {
    "gamma-i": (_cmd_gamma_i, False),
    "bondage": (_cmd_bondage, False),
    "bounds": (_cmd_bounds, False),
    "detect": (_cmd_detect, True),
    "discharge": (_cmd_discharge, True),
    "certify": (_cmd_certify, True),
    "check-embedding": (_cmd_check_embedding, True),
}


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with 3; status 2 is kept for theorem violations."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ibondage", description="Independent bondage number toolkit for planar graphs.")
    p.add_argument("verb", choices=sorted([*COMMANDS, "generate"]))
    p.add_argument("--input", action="append", default=[], help="graph file (.el, .g6 or .rot); repeatable")
    p.add_argument("--rotation", help="rotation system (.rot) for a single --input")
    p.add_argument("--class", dest="klass", choices=CLASSES)
    p.add_argument("--scheme", choices=[s.value for s in Scheme])
    p.add_argument("--rules", choices=sorted(RULESETS))
    p.add_argument("--cap", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=24, help="vertex budget for generate")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the report (or generated graph) here")
    p.add_argument("--prune", action="store_true", help="bondage: enable the sound subset pruning")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _generate(args) -> tuple[str, str]:
    if args.klass is None:
        raise DomainError("generate needs --class")
    g, e = generate(class_spec(args.klass, args.n, args.seed))
    suffix = Path(args.output).suffix if args.output else ".rot"
    if suffix == ".el":
        return formats.serialize_edgelist(g), suffix
    if suffix == ".g6":
        return formats.serialize_graph6(g), suffix
    return formats.serialize_rotation(e.rotation), suffix


def run(argv: list[str] | None = None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.verb == "generate":
            text, _ = _generate(args)
            if args.output:
                formats.write_text(args.output, text)
                return 0, ""
            return 0, text
        if not args.input:
            raise InputError(f"{args.verb} needs --input")
        if args.rotation and len(args.input) > 1:
            raise InputError("--rotation applies to a single --input")
        if args.verb in ("detect", "certify") and args.klass is None:
            raise DomainError(f"{args.verb} needs --class")
        func, need_embedding = COMMANDS[args.verb]
        parts = []
        for path in args.input:
            g, e = _load(path, args.rotation, need_embedding)
            report = func(g, e, args)
            parts.append(f"# {path}\n{report}" if len(args.input) > 1 else report)
        text = "".join(parts)
        if args.output:
            formats.write_text(args.output, text)
            return 0, ""
        return 0, text
    except TheoremViolation as exc:
        return 2, f"THEOREM_VIOLATION: {exc}\nstate: {exc.state}\n"
    except InputError as exc:
        return 3, f"error: {exc}\n"
    except DomainError as exc:
        return 1, f"error: {exc}\n"


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    (sys.stdout if code == 0 else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
