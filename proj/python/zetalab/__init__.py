"""Zeta and eta functions of operator spectra, and symbol-level residues.

Exact results come back as ``fractions.Fraction`` when rational and as the
library's exact string form otherwise (Gaussian rationals, radicals, floats).
"""

import json
import re
from fractions import Fraction

from ._core import (
    DomainError,
    EllipticityError,
    InsufficientDepthError,
    LadderMisalignmentError,
    Model,
    ParameterError,
    ParseError,
    PoleError,
    RepresentationError,
    Symbol,
    TruncationError,
    library_names,
)
from . import _core

__all__ = [
    "DomainError",
    "EllipticityError",
    "InsufficientDepthError",
    "LadderMisalignmentError",
    "Model",
    "ParameterError",
    "ParseError",
    "PoleError",
    "RepresentationError",
    "Symbol",
    "TruncationError",
    "evaluate",
    "exact",
    "library_names",
    "ncr",
    "pole_table",
    "residue",
    "run_checks",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def exact(text):
    """Fraction for a rational exact string, otherwise the string itself."""
    return Fraction(text) if _RATIONAL.match(text) else text


def residue(model, function, sigma, depth=-1):
    return exact(_core.residue(model, function, sigma, depth))


def evaluate(model, function, s, prec=256, depth=-1):
    """Returns (exact value or None, complex approximation)."""
    r = _core.evaluate(model, function, s, prec, depth)
    return (exact(r["exact"]) if r["is_exact"] else None), r["value"]


def pole_table(model, floor=-2, depth=-1, prec=256):
    rows = json.loads(_core.pole_table_json(model, floor, depth, prec))
    for r in rows:
        r["sigma"] = Fraction(r["sigma"])
        r["residue"] = exact(r["residue_exact"])
    return rows


def run_checks(ids=(), exact_only=False, model=None, seed=20240611):
    return json.loads(_core.run_checks_json(list(ids), exact_only, model, seed))


def ncr(symbol):
    return exact(symbol.ncr())
