"""Fundamental groups of simplicial complexes, posets and quivers with relations."""

from .combinatorics import (
    Poset,
    Quiver,
    SimplicialComplex,
    barycentric,
    complete_quiver,
    hasse_quiver,
    make_poset,
    make_quiver,
    order_quiver,
    pos_of_complex,
    sim_of_poset,
    validate_complex,
)
from .errors import FGToolError
from .groups import Presentation, abelianization_invariants, invariant_suite, simplify_presentation
from .pi1 import edge_path_presentation, quiver_pi1_presentation, van_kampen_assemble

__version__ = "0.1.0"

__all__ = [
    "FGToolError",
    "Poset",
    "Presentation",
    "Quiver",
    "SimplicialComplex",
    "abelianization_invariants",
    "barycentric",
    "complete_quiver",
    "edge_path_presentation",
    "hasse_quiver",
    "invariant_suite",
    "make_poset",
    "make_quiver",
    "order_quiver",
    "pos_of_complex",
    "quiver_pi1_presentation",
    "sim_of_poset",
    "simplify_presentation",
    "validate_complex",
    "van_kampen_assemble",
]
