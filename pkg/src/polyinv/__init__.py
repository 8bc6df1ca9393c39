"""Exact inversion of polynomial automorphisms and preimages of points and curves."""

from .endo import Curve, PolyMap, apply_to_curve, compose_maps, evaluate, normalize
from .filtration import DEGREE, FiltrationSpec, padic
from .groebner import buchberger_reduced, gb_curve_preimage, gb_inverse, gb_point_preimage, normal_form
from .inverse import InverseStatus, iterative_inverse
from .parsing import format_poly, parse_curve, parse_map, parse_point, parse_polys
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, block_order
from .preimage import PreimageStatus, curve_preimage, point_preimage
from .ring import GF, QQ, ZZ, Domain

__version__ = "0.1.0"

__all__ = [
    "Curve", "PolyMap", "apply_to_curve", "compose_maps", "evaluate", "normalize",
    "DEGREE", "FiltrationSpec", "padic",
    "buchberger_reduced", "gb_curve_preimage", "gb_inverse", "gb_point_preimage", "normal_form",
    "InverseStatus", "iterative_inverse",
    "format_poly", "parse_curve", "parse_map", "parse_point", "parse_polys",
    "GREVLEX", "LEX", "MonomialOrder", "Polynomial", "block_order",
    "PreimageStatus", "curve_preimage", "point_preimage",
    "GF", "QQ", "ZZ", "Domain",
]
