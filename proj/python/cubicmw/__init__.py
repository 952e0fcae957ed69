"""Exact analysis of cubic pencils and rational elliptic surfaces.

Reports are plain dicts; rationals inside them are "p/q" strings. Inputs that
take rationals accept int, Fraction or str.
"""

import json
from fractions import Fraction

from . import _cubicmw
from ._cubicmw import (
    DomainError,
    Error,
    InconsistentSurfaceError,
    InvalidPencilError,
    NotEllipticError,
    ParseError,
    UnsupportedError,
)

__all__ = [
    "analyze_pencil",
    "analyze_weierstrass",
    "family",
    "lattice",
    "delpezzo",
    "ninth_base_parameter",
    "manin_q_parameter",
    "Error",
    "DomainError",
    "ParseError",
    "InvalidPencilError",
    "NotEllipticError",
    "InconsistentSurfaceError",
    "UnsupportedError",
]


def _text(values):
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in values]


def analyze_pencil(h1, h2, base=None):
    """Base points, singular members and, given a base point, the fibration."""
    return json.loads(_cubicmw.analyze_pencil(h1, h2, None if base is None else _text(base)))


def analyze_weierstrass(equation):
    return json.loads(_cubicmw.analyze_weierstrass(equation))


def family(name, coefficients):
    return json.loads(_cubicmw.family(name, _text(coefficients)))


def lattice(name, minimal_norm=None, list_vectors=False):
    norm = None if minimal_norm is None else _text([minimal_norm])[0]
    return json.loads(_cubicmw.lattice(name, norm, list_vectors))


def delpezzo(m, list_classes=False):
    return json.loads(_cubicmw.delpezzo(m, list_classes))


def ninth_base_parameter(u):
    return Fraction(_cubicmw.ninth_base_parameter(_text(u)))


def manin_q_parameter(u):
    return Fraction(_cubicmw.manin_q_parameter(_text(u)))
