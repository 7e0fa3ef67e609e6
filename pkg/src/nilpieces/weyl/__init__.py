from .characters import (
    WeylIrrep,
    character_value,
    class_function,
    degree,
    irreps,
    make_irrep,
    sign_irrep,
    trivial,
)
from .group import (
    ClassLabel,
    WeylElement,
    class_sizes,
    conjugacy_class_of,
    elements,
    identity,
    length,
    longest_element,
    max_double_coset_reps,
    parabolic_subgroup,
    parse_element,
    simple_reflection,
)
from .springer import CellSummand, cell_module, sgn_multiplicity, springer_trivial

__all__ = [
    "CellSummand", "ClassLabel", "WeylElement", "WeylIrrep", "cell_module",
    "character_value", "class_function", "class_sizes", "conjugacy_class_of",
    "degree", "elements", "identity", "irreps", "length", "longest_element",
    "make_irrep", "max_double_coset_reps", "parabolic_subgroup", "parse_element",
    "sgn_multiplicity", "sign_irrep", "simple_reflection", "springer_trivial", "trivial",
]
