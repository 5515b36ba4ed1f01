"""Exact-arithmetic toolkit for odd-degree De Moivre polynomials: construction,
identity verification, zero enumeration and reconstruction, irreducibility
testing over Q, and Galois-group classification of the splitting field."""

__version__ = "0.1.0"

from .chebyshev import cheb_f, cheb_t, check_chebyshev_identities, dickson
from .config import Settings
from .construct import (
    DeMoivreInstance,
    check_split_identity,
    de_moivre_poly,
    family_bruen,
    family_filaseta,
    make_instance,
    radical_split_poly,
    sine_transfer_poly,
    split_cofactor_poly,
)
from .cyclotomic import sqrt_in_cyclotomic, sqrt_in_cyclotomic_oracle
from .errors import InvalidInstanceError, PrecisionError
from .exact import (
    FactorMap,
    SquarefreeDecomp,
    factor_integer,
    rational_reconstruct,
    squarefree_decompose,
    valuation,
)
from .galois import (
    GaloisClass,
    GaloisTag,
    IrreducibilityVerdict,
    PthPowerResult,
    Verdict,
    brute_factor_oracle,
    classify_galois_group,
    irreducible_by_power_test,
    irreducible_by_rational_root,
    irreducible_by_valuation,
    is_pth_power,
    radicand_ratio,
)
from .numeric import ComplexVal
from .polys import RatPoly
from .quadratic import QuadElem
from .zeros import (
    RadicalData,
    ZeroSet,
    radical_data,
    reconstruct_zero,
    splitting_field_data,
    zeros_all,
)

__all__ = [
    "ComplexVal",
    "DeMoivreInstance",
    "FactorMap",
    "GaloisClass",
    "GaloisTag",
    "InvalidInstanceError",
    "IrreducibilityVerdict",
    "PrecisionError",
    "PthPowerResult",
    "QuadElem",
    "RadicalData",
    "RatPoly",
    "Settings",
    "SquarefreeDecomp",
    "Verdict",
    "ZeroSet",
    "brute_factor_oracle",
    "cheb_f",
    "cheb_t",
    "check_chebyshev_identities",
    "check_split_identity",
    "classify_galois_group",
    "de_moivre_poly",
    "dickson",
    "factor_integer",
    "family_bruen",
    "family_filaseta",
    "irreducible_by_power_test",
    "irreducible_by_rational_root",
    "irreducible_by_valuation",
    "is_pth_power",
    "make_instance",
    "radical_data",
    "radical_split_poly",
    "radicand_ratio",
    "rational_reconstruct",
    "reconstruct_zero",
    "sine_transfer_poly",
    "split_cofactor_poly",
    "splitting_field_data",
    "sqrt_in_cyclotomic",
    "sqrt_in_cyclotomic_oracle",
    "squarefree_decompose",
    "valuation",
    "zeros_all",
]
