"""Command line front end. JSON on stdout, one-line JSON errors on stderr.

Exit codes: 0 success, 1 domain error (zero divisor, outside model, ...),
2 usage error.  Floats print with 17 significant digits unless the
KINEMATICA_PRECISION environment variable overrides the width, so output is
byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import ckgeom, clifford, conformal, kinclass, spin
from .ckgeom import KappaPair
from .errors import KinematicaError
from .gencomplex import GenComplex, gc


def _precision() -> int:
    raw = os.environ.get("KINEMATICA_PRECISION", "17")
    try:
        value = int(raw)
    except ValueError:
        value = 17
    return max(1, min(17, value))


def _fmt_float(x: float, precision: int) -> str:
    if x == 0.0:
        x = 0.0  # fold -0.0
    out = f"{x:.{precision}g}"
    return out


def dumps(obj, precision: int) -> str:
    """Minimal JSON writer with controlled float formatting, insertion order."""
    if isinstance(obj, dict):
        inner = ",".join(
            f"{dumps(str(k), precision)}:{dumps(v, precision)}"
            for k, v in obj.items()
        )
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps(v, precision) for v in obj) + "]"
    if isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj), precision)
    raise TypeError(f"cannot serialize {type(obj)}")


def _gc_json(w: GenComplex) -> dict:
    return {"re": w.re, "im": w.im, "kappa": w.kappa}


def _matrix_json(m: np.ndarray) -> list:
    return [[float(v) for v in row] for row in np.asarray(m)]


def _parse_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'u,v', got {text!r}")
    return float(parts[0]), float(parts[1])


def _parse_triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 'a,b,c', got {text!r}")
    return float(parts[0]), float(parts[1]), float(parts[2])


def _add_kappas(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kappa1", type=float, required=True)
    parser.add_argument("--kappa2", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinematica",
        description="two-parameter plane kinematics and Cayley-Klein geometry",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", help="the 27 bracket structures and counts")

    p = sub.add_parser("contract", help="contract a named kinematical algebra")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument(
        "--type", dest="kind", required=True,
        choices=sorted(kinclass.CONTRACTION_EXPONENTS),
    )

    p = sub.add_parser("graph", help="the contraction graph")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("exp", help="closed-form one-parameter subgroup element")
    p.add_argument("--gen", choices=("H", "P", "K"), required=True)
    p.add_argument("--param", type=float, required=True)
    _add_kappas(p)

    p = sub.add_parser("project", help="central projection of a quadric point")
    p.add_argument("--point", type=_parse_triple, required=True, metavar="z,t,x")
    _add_kappas(p)

    p = sub.add_parser("unproject", help="lift a plane point to the quadric")
    p.add_argument("--w", type=_parse_pair, required=True, metavar="u,v")
    _add_kappas(p)

    p = sub.add_parser("distance", help="closed-form distance between plane points")
    p.add_argument("--w1", type=_parse_pair, required=True, metavar="u,v")
    p.add_argument("--w2", type=_parse_pair, required=True, metavar="u,v")
    _add_kappas(p)

    p = sub.add_parser("rotate", help="rotor sandwich of a vector")
    p.add_argument("--axis", type=_parse_triple, required=True, metavar="n1,n2,n3")
    p.add_argument("--angle", type=float, required=True)
    p.add_argument("--vector", type=_parse_triple, required=True, metavar="a1,a2,a3")
    _add_kappas(p)

    p = sub.add_parser("spin", help="spin element over a generator exponential")
    p.add_argument("--gen", choices=("H", "P", "K"), required=True)
    p.add_argument("--param", type=float, required=True)
    _add_kappas(p)

    p = sub.add_parser("conformal-table", help="computed conformal bracket table")
    p.add_argument("--diff-paper", action="store_true", dest="diff",
                   help="include the diff against the published table")
    _add_kappas(p)

    p = sub.add_parser("region", help="SVG of the model region")
    p.add_argument("--svg", metavar="PATH", default=None,
                   help="output path (stdout when omitted)")
    _add_kappas(p)

    return parser


def _run_classify(args) -> dict:
    return {
        "counts": kinclass.classification_counts(),
        "algebras": kinclass.classification_rows(),
    }


def _run_contract(args) -> dict:
    try:
        triple = kinclass.triple_of_name(args.source)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    return {"to": kinclass.name_of(kinclass.contract_triple(triple, args.kind))}


def _graph_dot() -> str:
    lines = ["digraph contractions {"]
    for src, dst, kind in kinclass.contraction_graph():
        lines.append(f'  "{src}" -> "{dst}" [label="{kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _run_exp(args, kp: KappaPair) -> dict:
    return {
        "generator": args.gen,
        "param": args.param,
        "matrix": _matrix_json(ckgeom.exp_generator(kp, args.gen, args.param)),
    }


def _run_rotate(args, kp: KappaPair) -> dict:
    axis = clifford.UnitAxis(*args.axis)
    r = clifford.rotor(kp, axis, args.angle)
    vec = clifford.Multivector.vector(kp, *args.vector)
    out = clifford.sandwich(r, vec)
    return {
        "rotor": {
            "kappa1": kp.kappa1,
            "kappa2": kp.kappa2,
            "coeffs": [float(c) for c in r.coeffs],
        },
        "vector": [float(c) for c in out.vector_components()],
    }


def _run_spin(args, kp: KappaPair) -> dict:
    maker = {"H": spin.sl2_of_exp_h, "P": spin.sl2_of_exp_p, "K": spin.sl2_of_exp_k}
    s = maker[args.gen](kp, args.param)
    return {
        "alpha": _gc_json(s.alpha),
        "beta": _gc_json(s.beta),
        "so3": _matrix_json(spin.cover_to_so3(s)),
    }


def _run_conformal(args, kp: KappaPair) -> dict:
    brackets = {
        f"[{row},{col}]": coeffs
        for (row, col), coeffs in conformal.computed_brackets(kp).items()
        if row != col and coeffs
    }
    out: dict = {"brackets": brackets}
    if args.diff:
        out["diff"] = diffs = []
        for record in conformal.diff_vs_tabulated(kp):
            row, col = record["bracket"]
            diffs.append(
                {
                    "bracket": f"[{row},{col}]",
                    "computed": record["computed"],
                    "claimed": record["claimed"],
                }
            )
    return out


class UsageError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    precision = _precision()

    def emit(obj) -> None:
        sys.stdout.write(dumps(obj, precision) + "\n")

    try:
        if args.command == "classify":
            emit(_run_classify(args))
        elif args.command == "contract":
            emit(_run_contract(args))
        elif args.command == "graph":
            if args.format == "dot":
                sys.stdout.write(_graph_dot())
            else:
                emit(
                    [
                        {"from": s, "to": d, "type": k}
                        for s, d, k in kinclass.contraction_graph()
                    ]
                )
        else:
            kp = KappaPair(args.kappa1, args.kappa2)
            if args.command == "exp":
                emit(_run_exp(args, kp))
            elif args.command == "project":
                emit(_gc_json(ckgeom.project(kp, args.point)))
            elif args.command == "unproject":
                u, v = args.w
                point = ckgeom.unproject(kp, gc(u, v, kp.kappa2))
                emit({"point": [float(c) for c in point]})
            elif args.command == "distance":
                w1 = gc(args.w1[0], args.w1[1], kp.kappa2)
                w2 = gc(args.w2[0], args.w2[1], kp.kappa2)
                emit({"distance": ckgeom.distance(kp, w1, w2)})
            elif args.command == "rotate":
                emit(_run_rotate(args, kp))
            elif args.command == "spin":
                emit(_run_spin(args, kp))
            elif args.command == "conformal-table":
                emit(_run_conformal(args, kp))
            elif args.command == "region":
                svg = ckgeom.region_svg(kp)
                if args.svg:
                    with open(args.svg, "w") as fh:
                        fh.write(svg)
                else:
                    sys.stdout.write(svg)
    except UsageError as exc:
        sys.stderr.write(dumps({"error": "usage", "message": str(exc)}, precision) + "\n")
        return 2
    except KinematicaError as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(dumps(payload, precision) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
