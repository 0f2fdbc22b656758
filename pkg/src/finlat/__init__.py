"""Finite lattice combinatorics.

Posets and lattices on dense integer indices, lattice congruences and the
congruence-uniformity test, perspectivity cover labels and canonical join
representations, the core label order, interval doubling, and exhaustive
enumeration of small lattices up to isomorphism.
"""

from .errors import (
    ClosureViolation,
    CycleError,
    GammaNotFound,
    GammaNotUnique,
    InvalidStep,
    LatticeError,
    NotACover,
    NotALattice,
    NotComparable,
    NotCongruenceUniform,
    NotDistributive,
    ParseError,
    PsiNotInjective,
    RangeError,
    SizeLimit,
)
from .poset import Poset
from .lattice import Lattice, try_lattice
from .congruence import (
    Congruence,
    CongruenceFamily,
    UniformityCertificate,
    all_congruences,
    congruence_family,
    is_congruence,
    is_congruence_uniform,
    join_congruences,
    principal_congruence,
)
from .canonical import (
    SimplicialComplex,
    are_perspective,
    canonical_join_complex,
    canonical_join_rep,
    canonical_join_rep_oracle,
    cover_label,
    cover_label_table,
    face_poset,
    ideal_label,
)
from .core_label import (
    CoreLabelOrder,
    IntersectionReport,
    all_core_labels,
    boolean_defect,
    clo_is_lattice,
    clo_is_meet_semilattice,
    core_is_boolean,
    core_label_order,
    core_labels,
    has_intersection_property,
    nucleus,
)
from .constructions import (
    ScriptResult,
    antichain,
    boolean_lattice,
    build_from_script,
    chain,
    double,
    enumerate_lattices,
    ideal_lattice,
    irreducibles_below,
    principal_filter_closure,
    random_filter_script,
    random_interval_script,
)
from . import catalog, io

__version__ = "0.1.0"

__all__ = [
    "Poset",
    "Lattice",
    "try_lattice",
    "Congruence",
    "CongruenceFamily",
    "UniformityCertificate",
    "all_congruences",
    "congruence_family",
    "is_congruence",
    "is_congruence_uniform",
    "join_congruences",
    "principal_congruence",
    "SimplicialComplex",
    "are_perspective",
    "canonical_join_complex",
    "canonical_join_rep",
    "canonical_join_rep_oracle",
    "cover_label",
    "cover_label_table",
    "face_poset",
    "ideal_label",
    "CoreLabelOrder",
    "IntersectionReport",
    "all_core_labels",
    "boolean_defect",
    "clo_is_lattice",
    "clo_is_meet_semilattice",
    "core_is_boolean",
    "core_label_order",
    "core_labels",
    "has_intersection_property",
    "nucleus",
    "ScriptResult",
    "antichain",
    "boolean_lattice",
    "build_from_script",
    "chain",
    "double",
    "enumerate_lattices",
    "ideal_lattice",
    "irreducibles_below",
    "principal_filter_closure",
    "random_filter_script",
    "random_interval_script",
    "catalog",
    "io",
    "LatticeError",
    "CycleError",
    "RangeError",
    "NotALattice",
    "NotComparable",
    "NotACover",
    "NotDistributive",
    "GammaNotFound",
    "GammaNotUnique",
    "ClosureViolation",
    "PsiNotInjective",
    "SizeLimit",
    "InvalidStep",
    "NotCongruenceUniform",
    "ParseError",
]
