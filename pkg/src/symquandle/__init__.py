"""Symmetric quandle colorings, 3-cocycles and triple point weights of surface-links."""

from .algebra import (
    AbelianElement,
    AbelianSignature,
    GoodInvolution,
    Quandle,
    SymmetricQuandle,
    abelian_add,
    abelian_negate,
    abelian_zero,
    bound_norm,
    dihedral_quandle,
    enumerate_good_involutions,
    inverse_op,
    p3,
    p3_symmetric,
    symmetric_quandle,
    trivial_quandle,
    verify_good_involution,
    verify_quandle,
)
from .cocycle import (
    Cocycle3,
    FieldCocycleSpace,
    check_lemma_admissible,
    cocycle_kernel_basis,
    make_theta,
    verify_cocycle3,
)
from .diagram import (
    Coloring,
    LinkDiagram,
    count_colorings,
    enumerate_colorings,
    from_braid,
    parse_diagram,
    verify_coloring,
)
from .errors import InconsistencyError, MalformedInputError, ViolationError
from .movie import (
    ComponentSummary,
    FamilyParams,
    Movie,
    R3Record,
    TriplePointEvent,
    euler_and_genus,
    generate_family,
    lower_bound,
    theorem1_report,
    verify_r3,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianElement",
    "AbelianSignature",
    "Cocycle3",
    "Coloring",
    "ComponentSummary",
    "FamilyParams",
    "FieldCocycleSpace",
    "GoodInvolution",
    "InconsistencyError",
    "LinkDiagram",
    "MalformedInputError",
    "Movie",
    "Quandle",
    "R3Record",
    "SymmetricQuandle",
    "TriplePointEvent",
    "ViolationError",
    "abelian_add",
    "abelian_negate",
    "abelian_zero",
    "bound_norm",
    "check_lemma_admissible",
    "cocycle_kernel_basis",
    "count_colorings",
    "dihedral_quandle",
    "enumerate_colorings",
    "enumerate_good_involutions",
    "euler_and_genus",
    "from_braid",
    "generate_family",
    "inverse_op",
    "lower_bound",
    "make_theta",
    "p3",
    "p3_symmetric",
    "parse_diagram",
    "symmetric_quandle",
    "theorem1_report",
    "trivial_quandle",
    "verify_cocycle3",
    "verify_coloring",
    "verify_good_involution",
    "verify_quandle",
    "verify_r3",
    "weight",
]
