"""JSON (de)serialization for every domain type, with canonical rationals.

Rationals serialize as "p/q" ("p" when q = 1).  Generator lists are sorted
descending-lexicographically, halfspaces by (normal, bound), so serialization
is deterministic and parse(serialize(x)) == x.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cones import Cone
from .errors import ParseError
from .filtrations import AdicFiltration, SaturatedFiltration
from .ideals import MonomialIdeal
from .regions import CoboundedRegion, Halfspace


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def cone_to_obj(cone: Cone) -> dict:
    return {"rank": cone.rank, "rays": [list(r) for r in cone.rays]}


def cone_from_obj(obj) -> Cone:
    try:
        rays = obj["rays"]
        rank = obj["rank"]
    except (KeyError, TypeError) as exc:
        raise ParseError("cone object needs 'rank' and 'rays'") from exc
    if any(len(r) != rank for r in rays):
        raise ParseError("cone rays must match the declared rank")
    return Cone.from_rays(rays)


def region_to_obj(region: CoboundedRegion) -> dict:
    return {
        "cone": cone_to_obj(region.cone),
        "halfspaces": [
            {
                "normal": [format_rational(x) for x in hs.normal],
                "bound": format_rational(hs.bound),
            }
            for hs in region.halfspaces
        ],
    }


def region_from_obj(obj) -> CoboundedRegion:
    try:
        cone = cone_from_obj(obj["cone"])
        halfspaces = [
            Halfspace.make([parse_rational(x) for x in hs["normal"]], parse_rational(hs["bound"]))
            for hs in obj["halfspaces"]
        ]
    except (KeyError, TypeError) as exc:
        raise ParseError("region object needs 'cone' and 'halfspaces'") from exc
    return CoboundedRegion(cone, halfspaces)


def ideal_to_obj(ideal: MonomialIdeal) -> dict:
    return {
        "cone": cone_to_obj(ideal.cone),
        "generators": [list(g) for g in ideal.generators],
    }


def ideal_from_obj(obj) -> MonomialIdeal:
    try:
        cone = cone_from_obj(obj["cone"])
        gens = obj["generators"]
    except (KeyError, TypeError) as exc:
        raise ParseError("ideal object needs 'cone' and 'generators'") from exc
    return MonomialIdeal.from_generators(cone, gens)


def filtration_to_obj(f) -> dict:
    if isinstance(f, SaturatedFiltration):
        return {"type": "saturated", "region": region_to_obj(f.region)}
    if isinstance(f, AdicFiltration):
        return {
            "type": "adic",
            "ideal": ideal_to_obj(f.ideal),
            "speed": format_rational(f.speed),
        }
    raise ParseError(f"cannot serialize filtration {f!r}")


def filtration_from_obj(obj):
    kind = obj.get("type") if isinstance(obj, dict) else None
    if kind == "saturated":
        return SaturatedFiltration(region_from_obj(obj["region"]))
    if kind == "adic":
        return AdicFiltration(ideal_from_obj(obj["ideal"]), parse_rational(obj["speed"]))
    raise ParseError("filtration object needs type 'saturated' or 'adic'")


def singularity_from_obj(obj) -> Cone:
    if isinstance(obj, dict) and "cone" in obj:
        return cone_from_obj(obj["cone"])
    raise ParseError("singularity object needs 'cone'")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc


SCHEMAS = {
    "rational": 'string "p/q", or "p" when the denominator is 1',
    "cone": {"rank": "int", "rays": [["int"]]},
    "region": {
        "cone": "<cone>",
        "halfspaces": [{"normal": ["rational"], "bound": "rational (positive)"}],
    },
    "ideal": {"cone": "<cone>", "generators": [["int"]]},
    "filtration": [
        {"type": "saturated", "region": "<region>"},
        {"type": "adic", "ideal": "<ideal>", "speed": "rational (positive)"},
    ],
    "singularity": {"cone": "<cone>"},
}
