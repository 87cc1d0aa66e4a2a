"""Exact elimination and denominator bounds for irrationality certificates."""

from .certificate import (CertificationError, IrrationalityCertificate, UnitRootError,
                          certify_slice, denominator_bound, exclude_rationals)
from .elimination import (CriticalSystem, build_critical_system, first_subresultant_lead,
                          resultant)
from .intpoly import IntPoly, irreducible_mod_p, palindromic_reduce, squarefree_part

__all__ = [
    "CertificationError", "CriticalSystem", "IntPoly", "IrrationalityCertificate",
    "UnitRootError", "build_critical_system", "certify_slice", "denominator_bound",
    "exclude_rationals", "first_subresultant_lead", "irreducible_mod_p",
    "palindromic_reduce", "resultant", "squarefree_part",
]
