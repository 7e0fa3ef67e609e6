"""Nilpotent orbits, special pieces and stable dimension counts for
special unipotent representations."""
from .errors import DataNotShipped, GenericityError, HypothesisError, NilpiecesError
from .lietype import LieType
from .orbits import (
    NilpotentOrbit,
    all_orbits,
    dual,
    is_even,
    is_special,
    orbit,
    parse_orbit,
    special_piece,
    weighted_dynkin,
    zero_levi,
)
from .stable import StableBasisReport, arthur_count, springer_side_dimension, stable_dimension
from .tableaux import SignedTableau, get_preset

__version__ = "0.1.0"

__all__ = [
    "DataNotShipped", "GenericityError", "HypothesisError", "LieType", "NilpiecesError",
    "NilpotentOrbit", "SignedTableau", "StableBasisReport", "all_orbits", "arthur_count",
    "dual", "get_preset", "is_even", "is_special", "orbit", "parse_orbit",
    "special_piece", "springer_side_dimension", "stable_dimension", "weighted_dynkin",
    "zero_levi",
]
