"""Roots of polynomials over F_p(t) as Hahn series.

Each function parses ``poly`` (e.g. ``"X^3 - X^2 - 1/t"``) at the prime ``p``
and returns the report as a dict. Parse errors raise ValueError.
"""

import json

from . import _core

SCHEMA = _core.SCHEMA
normalize = _core.normalize


def roots(poly, p, depth=10):
    return json.loads(_core.roots_json(poly, p, depth))


def addpol(poly, p):
    return json.loads(_core.addpol_json(poly, p))


def intersections(poly, p):
    return json.loads(_core.intersections_json(poly, p))


def bounds(poly, p, mode="sharp"):
    return json.loads(_core.bounds_json(poly, p, mode))


def order_bound(poly, p):
    return json.loads(_core.order_bound_json(poly, p))


__all__ = ["SCHEMA", "normalize", "roots", "addpol", "intersections", "bounds", "order_bound"]
