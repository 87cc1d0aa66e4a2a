"""Teichmuller polynomials, dilatation minima and irrationality certificates."""

from .conenorm import (ConeDesc, branched_admissible, drilling_equivalent, fiber_topology,
                       fibered_cone, slice_covector, teich_norm)
from .dilatation import (AModulePresentation, DilatationValue, MinPoint, Segment,
                         a_module_presentation, directional_derivative, eval_lambda,
                         minimize_on_slice, segment_from_covector)
from .groupring import GroupPoly, normalize_unit, parse_poly
from .orbits import OrbitClass, census, drilling_class_representatives
from .penner import PennerSpec, TwistStep, phi, symmetry_check, twist_blocks
from .polymat import PolyMatrix, char_det, det, mat_mul, teichmuller_from_transition

__all__ = [
    "AModulePresentation", "ConeDesc", "DilatationValue", "GroupPoly", "MinPoint",
    "OrbitClass", "PennerSpec", "PolyMatrix", "Segment", "TwistStep",
    "a_module_presentation", "branched_admissible", "census", "char_det", "det",
    "directional_derivative", "drilling_class_representatives", "drilling_equivalent",
    "eval_lambda", "fiber_topology", "fibered_cone", "mat_mul", "minimize_on_slice",
    "normalize_unit", "parse_poly", "phi", "segment_from_covector", "slice_covector",
    "symmetry_check", "teich_norm", "teichmuller_from_transition", "twist_blocks",
]
