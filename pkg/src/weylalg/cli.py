"""
Command-line front end. Every command prints one JSON report.

Exit codes: 0 success, 2 invalid input (the report says why), 1 an internal
consistency check failed, which always indicates a bug.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .element import parse_element, to_pairs
from .errors import ArgumentError, WeylError
from .graded import check_space
from .hseries import as_fraction
from .serialize import dumps, load_space, read_json, space_to_json


class InternalCheckFailed(Exception):
    pass


class ValidationFailed(Exception):
    def __init__(self, report):
        super().__init__("validation failed")
        self.report = report


def _header():
    return {"tool": "weylalg", "version": __version__}


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ArgumentError(f"not a rational number: {text!r}") from None


# -- commands -----------------------------------------------------------------

def _algebra(args):
    from .weyl import WeylAlgebra

    space = load_space(args.space)
    problems = check_space(space)
    if problems:
        raise ValidationFailed({"problems": problems, "valid": False})
    return WeylAlgebra(space, _rational(args.normalization))


def cmd_star(args):
    alg = _algebra(args)
    a, b = parse_element(alg.space, args.a), parse_element(alg.space, args.b)
    out = alg.star(a, b)
    return {"config": {"a": args.a, "b": args.b, "normalization": str(alg.normalization),
                       "space": space_to_json(alg.space)},
            "result": to_pairs(out), "truncated": out.truncated}


def cmd_bracket(args):
    alg = _algebra(args)
    a, b = parse_element(alg.space, args.a), parse_element(alg.space, args.b)
    out = alg.bracket(a, b)
    return {"config": {"a": args.a, "b": args.b, "normalization": str(alg.normalization),
                       "space": space_to_json(alg.space)},
            "result": to_pairs(out), "truncated": out.truncated}


def _lie(source):
    from .lie import load_lie

    text = str(source).strip()
    if text.startswith("{"):
        from .lie import lie_from_json
        return lie_from_json(read_json(text))
    return load_lie(text)


def cmd_mc_check(args):
    from .ce import classical_mismatches
    from .lie import check_metric_invariance
    from .weyl import build_mc_element, lie_weyl_algebra, mc_defect, quantum_d2_failures

    lie = _lie(args.lie)
    config = {"lie": lie.to_json(), "max_degree": args.max_degree,
              "normalization": args.normalization}
    problems = [p for p in check_metric_invariance(lie) if not p.startswith("jacobi")]
    if problems:
        raise ValidationFailed({"config": config, "problems": problems, "valid": False})
    alg = lie_weyl_algebra(lie, _rational(args.normalization))
    q = build_mc_element(lie, alg)
    defect = mc_defect(q, alg)
    report = {"config": config, "q": to_pairs(q), "qq": to_pairs(defect), "mc": not defect}
    if defect:
        raise ValidationFailed(report)
    failures = quantum_d2_failures(q, alg, args.max_degree)
    report["d2_zero"] = not failures
    if failures:
        raise InternalCheckFailed(f"d^2 != 0 on {len(failures)} monomials")
    mism = classical_mismatches(lie, q, alg)
    report["matches_classical"] = not mism
    if mism:
        raise InternalCheckFailed("quantum differential differs from the classical one")
    return report


def cmd_linf(args):
    from .operad import bush_complex, check_d2, complex_homology, tree_complex

    if args.arity < 1:
        raise ArgumentError("arity must be at least 1")
    if args.bushes:
        levels = bush_complex(args.arity, marked=args.marked)
    else:
        if args.arity < 2:
            raise ArgumentError("trees need arity at least 2")
        levels = tree_complex(args.arity)
    report = {"config": {"arity": args.arity, "complex": ("marked-bushes" if args.marked else "bushes")
                         if args.bushes else "trees"},
              "counts": {str(k): len(b) for k, b in enumerate(levels) if b}}
    if args.check_d2:
        ok = check_d2(levels)
        report["d2_zero"] = ok
        if not ok:
            raise InternalCheckFailed("d^2 != 0 on the tree complex")
    if args.homology:
        report["homology"] = {str(k): r for k, r in complex_homology(levels).items()}
    return report


def cmd_lie_homology(args):
    from .ce import build_ce_complex, ce_via_bushes, homology

    lie = _lie(args.lie)
    build = ce_via_bushes if args.via == "bushes" else build_ce_complex
    cx = build(lie, args.coefficients, args.cutoff)
    if not cx.d_squared_zero():
        raise InternalCheckFailed("d^2 != 0 on the CE complex")
    h = homology(cx)
    return {"config": {"coefficients": args.coefficients, "cutoff": args.cutoff,
                       "lie": lie.to_json(), "via": args.via},
            "d2_zero": True,
            "dims": {str(w): d for w, d in h.dims.items()},
            "ranks": {str(w): r for w, r in h.ranks.items()}}


def cmd_facthom(args):
    from .facthom import ManifoldHomology, commutative_fact_hom, koszul_verify, weyl_degree_formula

    M = ManifoldHomology.from_json(read_json(args.manifold))
    V = load_space(args.space)
    config = {"cutoff": args.cutoff, "manifold": M.to_json(), "mode": args.mode,
              "space": space_to_json(V)}
    if args.mode == "commutative":
        table = commutative_fact_hom(M, V, args.cutoff)
        return {"config": config,
                "dims": {str(w): {str(d): n for d, n in row.items()} for w, row in table.items()}}
    problems = check_space(V)
    if problems:
        raise ValidationFailed({"config": config, "problems": problems, "valid": False})
    if args.mode == "formula":
        return {"config": config, "degree": weyl_degree_formula(M, V), "rank": 1}
    r = koszul_verify(M, V, args.cutoff)
    report = {"config": config, "degree": r.degree, "formula_degree": r.formula_degree,
              "rank": r.total_rank,
              "ranks": [{"degree": d, "rank": n, "weight": w} for (w, d), n in sorted(r.ranks.items())]}
    if r.representative is not None:
        from .facthom import homology_tensor_space
        report["representative"] = homology_tensor_space(M, V).format_monomial(r.representative)
    return report


def cmd_graph_weight(args):
    from .graphs import graph_weight, ihx_values, load_graph

    G = load_graph(args.graph)
    lie = _lie(args.lie)
    for v in args.flip or []:
        if not 0 <= v < len(G.vertices):
            raise ArgumentError(f"no vertex {v}")
        G = G.flip(v)
    report = {"config": {"flip": args.flip or [], "graph": G.to_json(), "lie": lie.to_json()},
              "weight": str(graph_weight(G, lie))}
    if args.ihx:
        rows = []
        for e, (a, b) in enumerate(G.edges):
            if G.vertex_of(a) == G.vertex_of(b):
                continue
            i, h, x = ihx_values(lie, G, e)
            rows.append({"edge": e, "H": str(h), "I": str(i), "X": str(x), "holds": i == h - x})
        report["ihx"] = rows
    return report


def cmd_validate(args):
    from .facthom import ManifoldHomology
    from .graphs import TrivalentGraph
    from .lie import check_lie, check_metric_invariance, lie_from_json
    from .serialize import space_from_json

    data = read_json(args.file)
    kind = args.kind
    if kind == "auto":
        if "generators" in data:
            kind = "space"
        elif "brackets" in data or "dim" in data and "betti" not in data:
            kind = "lie"
        elif "vertices" in data:
            kind = "graph"
        elif "betti" in data:
            kind = "manifold"
        else:
            raise ArgumentError("cannot tell what kind of input this is; pass --kind")
    try:
        if kind == "space":
            problems = check_space(space_from_json(data))
        elif kind == "lie":
            lie = lie_from_json(data)
            problems = check_metric_invariance(lie) if lie.metric is not None else check_lie(lie)
        elif kind == "graph":
            TrivalentGraph.from_json(data)
            problems = []
        else:
            M = ManifoldHomology.from_json(data)
            problems = [] if M.is_poincare_dual() else ["betti: Poincare duality fails"]
    except ArgumentError as exc:
        problems = [str(exc)]
    report = {"config": {"kind": kind}, "problems": problems, "valid": not problems}
    if problems:
        raise ValidationFailed(report)
    return report


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylalg", description=__doc__.strip().splitlines()[0])
    p.add_argument("--version", action="version", version=f"weylalg {__version__}")
    p.add_argument("--pretty", action="store_true", help="plain-text summary instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn in (("star", cmd_star), ("bracket", cmd_bracket)):
        s = sub.add_parser(name, help=f"{name} of two elements")
        s.add_argument("--space", required=True, help="space.json, inline JSON or catalogue name")
        s.add_argument("--a", required=True)
        s.add_argument("--b", required=True)
        s.add_argument("--normalization", default="1")
        s.set_defaults(func=fn)

    s = sub.add_parser("mc-check", help="Maurer-Cartan element and quantum CE differential")
    s.add_argument("--lie", required=True)
    s.add_argument("--max-degree", type=int, default=5)
    s.add_argument("--normalization", default="1")
    s.set_defaults(func=cmd_mc_check)

    s = sub.add_parser("linf", help="tree and bush complexes")
    s.add_argument("--arity", type=int, required=True)
    s.add_argument("--check-d2", action="store_true")
    s.add_argument("--homology", action="store_true")
    s.add_argument("--bushes", action="store_true")
    s.add_argument("--marked", action="store_true")
    s.set_defaults(func=cmd_linf)

    s = sub.add_parser("lie-homology", help="Chevalley-Eilenberg homology")
    s.add_argument("--lie", required=True)
    s.add_argument("--coefficients", choices=["trivial", "adjoint"], default="trivial")
    s.add_argument("--cutoff", type=int, default=3)
    s.add_argument("--via", choices=["direct", "bushes"], default="direct")
    s.set_defaults(func=cmd_lie_homology)

    s = sub.add_parser("facthom", help="factorization homology on a closed manifold")
    s.add_argument("--manifold", required=True, help='e.g. \'{"dim":3,"betti":[1,0,0,1]}\'')
    s.add_argument("--space", required=True)
    s.add_argument("--mode", choices=["formula", "koszul", "commutative"], default="formula")
    s.add_argument("--cutoff", type=int, default=6)
    s.set_defaults(func=cmd_facthom)

    s = sub.add_parser("graph-weight", help="weight of a trivalent graph")
    s.add_argument("--graph", required=True, help="theta, k4, necklace, tadpole or a file")
    s.add_argument("--lie", required=True)
    s.add_argument("--flip", type=int, action="append", help="reverse a vertex orientation")
    s.add_argument("--ihx", action="store_true")
    s.set_defaults(func=cmd_graph_weight)

    s = sub.add_parser("validate", help="check an input file")
    s.add_argument("file")
    s.add_argument("--kind", choices=["auto", "space", "lie", "graph", "manifold"], default="auto")
    s.set_defaults(func=cmd_validate)
    return p


def _pretty(report: dict, indent: str = "") -> str:
    lines = []
    for k in sorted(report):
        v = report[k]
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_pretty(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    args = parser.parse_args(argv)
    code = 0
    try:
        body = args.func(args)
    except ValidationFailed as exc:
        body, code = exc.report, 2
    except InternalCheckFailed as exc:
        body, code = {"error": str(exc), "internal": True}, 1
    except WeylError as exc:
        body, code = {"error": str(exc)}, 2
    report = {"header": _header(), **body}
    text = _pretty(report) if args.pretty else dumps(report)
    return code, text


def main(argv=None) -> int:
    code, text = run(argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
