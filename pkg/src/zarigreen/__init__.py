"""Exact Zariski decompositions and non-Archimedean Green's functions."""

from .curvecase import CurveGreenFunction, CurveSigma, evaluate_curve, green_curve
from .errors import ZariGreenError
from .flagcone import (FlagConfiguration, FlagGreenFunction, evaluate_flag,
                       flag_green, flag_zariski, lambda_nef_on_S)
from .green import (GreenFunction, RealDivisorialValuation, SigmaSet,
                    green_from_sigma)
from .lattice import (CURVES, QUADRIC, CurveCone, DivisorClass, QuadricCone,
                      SurfaceLattice)
from .scalars import (EQ, GT, LT, Rational, Scalar, compare, format_scalar,
                      is_rational, parse_scalar, solve_quadratic)
from .zariski import (Certificate, FamilySegment, PLFamily,
                      ZariskiDecomposition, certify, minimal_vanishing_order,
                      negative_support, pl_family, pl_family_csv,
                      threshold_psef, zariski_decompose)

__version__ = "0.1.0"

__all__ = [
    "CURVES", "QUADRIC", "Certificate", "CurveCone", "CurveGreenFunction",
    "CurveSigma", "DivisorClass", "EQ", "FamilySegment", "FlagConfiguration",
    "FlagGreenFunction", "GT", "GreenFunction", "LT", "PLFamily", "QuadricCone",
    "Rational", "RealDivisorialValuation", "Scalar", "SigmaSet",
    "SurfaceLattice", "ZariGreenError", "ZariskiDecomposition", "certify",
    "compare", "evaluate_curve", "evaluate_flag", "flag_green", "flag_zariski",
    "format_scalar", "green_curve", "green_from_sigma", "is_rational",
    "lambda_nef_on_S", "minimal_vanishing_order", "negative_support",
    "parse_scalar", "pl_family", "pl_family_csv", "solve_quadratic",
    "threshold_psef", "zariski_decompose",
]
