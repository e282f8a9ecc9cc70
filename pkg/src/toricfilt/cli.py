"""Deterministic command-line front end.

Exit codes: 0 success, 2 parse/validation error, 3 tolerance failure.
All numeric flags parse as exact rationals "p/q"; outputs use canonical
rational strings and sorted structures, so bytes are stable for fixed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import jsonio
from .errors import ToleranceError, ToricfiltError, ValidationError
from .filtrations import (
    ideal_at,
    jumping_numbers,
    meet_filtrations,
    multiplicity,
    saturate,
    saturated_join,
)
from .geodesics import (
    DHGrid,
    Geodesic,
    dh_union_mass,
    geodesic_ideal_at,
    geodesic_multiplicity,
    geodesic_region,
)
from .ideals import integral_closure, rees_valuations
from .metrics import d1, d1_coeff, dinf
from .oracles import brute_multiplicity
from .ideals import colength as ideal_colength
from .singularities import (
    ToricSingularity,
    lct,
    lct_lipschitz_check,
    normalized_volume,
    nvol_search,
)
from .svgout import render_svg


def _rational(text: str) -> Fraction:
    return jsonio.parse_rational(text)


def _load(path: str):
    if path == "-":
        return jsonio.loads(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return jsonio.loads(fh.read())


def _load_filtration(path: str):
    return jsonio.filtration_from_obj(_load(path))


def _load_ideal(path: str):
    return jsonio.ideal_from_obj(_load(path))


def _emit(out, text: str) -> None:
    out.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricfilt", description=__doc__)
    parser.add_argument("--schema", action="store_true", help="print the JSON schemas and exit")
    sub = parser.add_subparsers(dest="command")

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return p

    p = add("mult", help="multiplicity of a filtration")
    p.add_argument("filtration")

    for name in ("d1", "dinf", "meet", "join"):
        p = add(name)
        p.add_argument("left")
        p.add_argument("right")

    p = add("d1-coeff", help="metric on ideals with exponents")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--c", type=_rational, default=Fraction(1))
    p.add_argument("--d", type=_rational, default=Fraction(1))

    p = add("saturate")
    p.add_argument("filtration")

    for name in ("closure", "rees"):
        p = add(name)
        p.add_argument("ideal")

    p = add("ideal-at")
    p.add_argument("filtration")
    p.add_argument("--level", type=_rational, required=True)

    p = add("jumping")
    p.add_argument("filtration")
    p.add_argument("--max", type=_rational, required=True, dest="bound")

    p = add("geodesic")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--lambda", type=_rational, dest="level")
    p.add_argument("--mult", type=_rational, dest="mult_tol")

    p = add("dhgrid")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--step", type=_rational, required=True)
    p.add_argument("--size", type=int, default=8)

    p = add("lct")
    p.add_argument("filtration")

    p = add("nvol")
    p.add_argument("singularity")
    p.add_argument("--u", help="comma-separated rational weight; omit to search")

    p = add("lct-lipschitz")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--eps", type=_rational, required=True)

    p = add("oracle")
    p.add_argument("action", choices=("colength", "mult-seq"))
    p.add_argument("target")
    p.add_argument("--m", type=int)
    p.add_argument("--mlist")

    p = add("okounkov-svg")
    p.add_argument("target", help="filtration or ideal JSON")
    p.add_argument("--window", type=int, default=8)

    return parser


def _format_value(value: Fraction, args, out, label: str = "value") -> None:
    if args.format == "json":
        _emit(out, jsonio.dumps({label: jsonio.format_rational(value)}))
    elif args.format == "csv":
        _emit(out, f"{label},{jsonio.format_rational(value)}\n")
    else:
        _emit(out, jsonio.format_rational(value) + "\n")


def _run(args, out) -> int:
    if args.command == "mult":
        _format_value(multiplicity(_load_filtration(args.filtration)), args, out)
    elif args.command == "d1":
        value = d1(_load_filtration(args.left), _load_filtration(args.right))
        _format_value(value, args, out, label="d1")
    elif args.command == "d1-coeff":
        value = d1_coeff(_load_ideal(args.left), args.c, _load_ideal(args.right), args.d)
        _format_value(value, args, out, label="d1_coeff")
    elif args.command == "dinf":
        report = dinf(saturate(_load_filtration(args.left)), saturate(_load_filtration(args.right)))
        if args.format == "json":
            _emit(out, jsonio.dumps({
                "dinf": jsonio.format_rational(report.value),
                "witness": list(report.witness) if report.witness else None,
            }))
        elif args.format == "csv":
            _emit(out, f"dinf,{jsonio.format_rational(report.value)}\n")
        else:
            witness = f" witness={report.witness}" if report.witness else ""
            _emit(out, jsonio.format_rational(report.value) + witness + "\n")
    elif args.command == "meet":
        result = meet_filtrations(
            saturate(_load_filtration(args.left)), saturate(_load_filtration(args.right))
        )
        _emit(out, jsonio.dumps(jsonio.filtration_to_obj(result)))
    elif args.command == "join":
        result = saturated_join(_load_filtration(args.left), _load_filtration(args.right))
        _emit(out, jsonio.dumps(jsonio.filtration_to_obj(result)))
    elif args.command == "saturate":
        _emit(out, jsonio.dumps(jsonio.filtration_to_obj(saturate(_load_filtration(args.filtration)))))
    elif args.command == "closure":
        closed = integral_closure(_load_ideal(args.ideal))
        _emit(out, jsonio.dumps(jsonio.ideal_to_obj(closed)))
    elif args.command == "rees":
        pairs = rees_valuations(_load_ideal(args.ideal))
        _emit(out, jsonio.dumps([
            {"normal": list(u), "value": jsonio.format_rational(v)} for u, v in pairs
        ]))
    elif args.command == "ideal-at":
        result = ideal_at(saturate(_load_filtration(args.filtration)), args.level)
        _emit(out, jsonio.dumps(jsonio.ideal_to_obj(result)))
    elif args.command == "jumping":
        values = jumping_numbers(saturate(_load_filtration(args.filtration)), args.bound)
        _emit(out, jsonio.dumps([jsonio.format_rational(v) for v in values]))
    elif args.command == "geodesic":
        g = Geodesic.between(
            saturate(_load_filtration(args.left)), saturate(_load_filtration(args.right))
        )
        if args.level is not None:
            ideal = geodesic_ideal_at(g, args.t, args.level)
            _emit(out, jsonio.dumps(jsonio.ideal_to_obj(ideal)))
        elif args.mult_tol is not None:
            lo, hi = geodesic_multiplicity(g, args.t, args.mult_tol)
            if args.format == "csv":
                _emit(out, "t,e_lower,e_upper\n")
                _emit(out, f"{jsonio.format_rational(args.t)},"
                           f"{jsonio.format_rational(lo)},{jsonio.format_rational(hi)}\n")
            else:
                _emit(out, jsonio.dumps({
                    "t": jsonio.format_rational(args.t),
                    "e_lower": jsonio.format_rational(lo),
                    "e_upper": jsonio.format_rational(hi),
                }))
        else:
            region = geodesic_region(g, args.t)
            _emit(out, jsonio.dumps(jsonio.region_to_obj(region)))
    elif args.command == "dhgrid":
        g = Geodesic.between(
            saturate(_load_filtration(args.left)), saturate(_load_filtration(args.right))
        )
        grid = DHGrid.build(g, args.step, args.size)
        _emit(out, "x,y,U\n")
        for x, y, u in grid.values:
            _emit(out, f"{jsonio.format_rational(x)},{jsonio.format_rational(y)},"
                       f"{jsonio.format_rational(u)}\n")
    elif args.command == "lct":
        f = saturate(_load_filtration(args.filtration))
        singularity = ToricSingularity.from_cone(f.cone)
        result = lct(singularity, f)
        payload = {
            "lct": jsonio.format_rational(result.value),
            "witness": list(result.witness),
            "gorenstein_vector": [jsonio.format_rational(x) for x in singularity.gorenstein_vector],
            "on_boundary": result.on_boundary,
        }
        if args.format == "text":
            _emit(out, f"{jsonio.format_rational(result.value)} witness={result.witness}\n")
        else:
            _emit(out, jsonio.dumps(payload))
    elif args.command == "nvol":
        cone = jsonio.singularity_from_obj(_load(args.singularity))
        singularity = ToricSingularity.from_cone(cone)
        if args.u:
            weight = tuple(jsonio.parse_rational(x) for x in args.u.split(","))
            _format_value(normalized_volume(singularity, weight), args, out, label="nvol")
        else:
            result = nvol_search(singularity)
            _emit(out, jsonio.dumps({
                "weight": [jsonio.format_rational(x) for x in result.weight],
                "value": jsonio.format_rational(result.value),
                "neighborhood": [jsonio.format_rational(x) for x in result.neighborhood],
            }))
    elif args.command == "lct-lipschitz":
        f = saturate(_load_filtration(args.left))
        g = saturate(_load_filtration(args.right))
        singularity = ToricSingularity.from_cone(f.cone)
        report = lct_lipschitz_check(singularity, f, g, args.eps)
        _emit(out, jsonio.dumps({
            "epsilon": jsonio.format_rational(report.epsilon),
            "delta": jsonio.format_rational(report.delta),
            "dinf": jsonio.format_rational(report.distance),
            "lct_shift": jsonio.format_rational(report.lct_shift),
            "applicable": report.applicable,
            "passed": report.passed,
        }))
        if not report.passed:
            raise ToleranceError("lct Lipschitz bound failed")
    elif args.command == "oracle":
        if args.action == "colength":
            if args.m is None:
                raise ValidationError("oracle colength needs --m")
            from .ideals import power

            ideal = _load_ideal(args.target)
            value = ideal_colength(power(ideal, args.m),
                                   tau_shell=Fraction(args.m + ideal.cone.rank + 1, args.m))
            _emit(out, f"{value}\n")
        else:
            if not args.mlist:
                raise ValidationError("oracle mult-seq needs --mlist")
            m_list = [int(x) for x in args.mlist.split(",")]
            f = _load_filtration(args.target)
            values = brute_multiplicity(f, m_list)
            _emit(out, "m,estimate\n")
            for m, v in zip(m_list, values):
                _emit(out, f"{m},{jsonio.format_rational(v)}\n")
    elif args.command == "okounkov-svg":
        obj = _load(args.target)
        if isinstance(obj, dict) and obj.get("type"):
            f = saturate(jsonio.filtration_from_obj(obj))
            data = render_svg(f.cone, f.region, None, window=args.window)
        else:
            ideal = jsonio.ideal_from_obj(obj)
            from .ideals import newton_polyhedron

            data = render_svg(ideal.cone, newton_polyhedron(ideal), ideal, window=args.window)
        out.write(data.decode("utf-8"))
    else:
        raise ValidationError("no subcommand given (try --help)")
    return 0


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.schema:
        _emit(out, json.dumps(jsonio.SCHEMAS, sort_keys=True, indent=2) + "\n")
        return 0
    try:
        return _run(args, out)
    except ToleranceError as exc:
        print(f"tolerance failure: {exc}", file=sys.stderr)
        return 3
    except (ToricfiltError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
