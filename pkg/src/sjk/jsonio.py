"""Lossless JSON interchange for polynomials and coefficient series.

Schema per polynomial:

    {"variables": ["x", ...],
     "terms": [{"exps": [..], "num": "..", "den": "..", "sqrt_pi_pow": 0}, ..]}

num and den are decimal strings so arbitrary-precision values survive
any JSON reader; terms are emitted in graded-lexicographic descending
order, which makes serialization deterministic and round-trips
byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .poly import CoeffSeries, Poly
from .scalar import ExactScalar


def poly_to_obj(p: Poly) -> dict:
    terms = []
    for exps, c in p.sorted_terms():
        terms.append(
            {
                "exps": list(exps),
                "num": str(c.rat.numerator),
                "den": str(c.rat.denominator),
                "sqrt_pi_pow": c.sqrt_pi_pow,
            }
        )
    return {"variables": list(p.vars), "terms": terms}


def poly_from_obj(obj: dict) -> Poly:
    vars = tuple(obj["variables"])
    terms = {}
    for t in obj["terms"]:
        c = ExactScalar(
            Fraction(int(t["num"]), int(t["den"])), int(t.get("sqrt_pi_pow", 0))
        )
        terms[tuple(t["exps"])] = c
    return Poly(vars, terms)


def series_to_obj(s: CoeffSeries, parameter: str = "lambda") -> dict:
    return {
        "parameter": parameter,
        "order": s.order,
        "coefficients": [poly_to_obj(c) for c in s.coeffs],
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "), indent=2)
