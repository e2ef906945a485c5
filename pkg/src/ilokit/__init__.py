"""Finite ILO settings, (hyper)subtractions, quandles, split epimorphisms
with their semi-direct indexes, and skew braces, checked by exhaustive
evaluation on small carriers."""

from .abelian import (
    decompose_slominski,
    extract_alexander,
    internal_check,
    internal_operations,
    umag_hst_abelian_check,
)
from .braces import (
    Digroup,
    SkewBrace,
    brace_indexes,
    brace_split_epi,
    digroup,
    is_skew_brace,
    opposite_brace,
    skew_brace,
    trivial_brace,
)
from .constructions import (
    AlexanderDatum,
    alexander,
    conjugation_quandle,
    from_group,
    multiplier,
    prequandle_catalog,
    product,
    subalgebra_closure,
    trivial_quandle,
)
from .core import (
    IloModel,
    Magma,
    StructureClass,
    adjoint,
    check_associativity_equivalence,
    check_commutativity_equivalence,
    check_slominski_identities,
    classify,
    dual,
    model,
    relabel,
)
from .enumeration import (
    EnumerationRequest,
    are_isomorphic,
    canonical_model,
    census,
    enumerate_models,
    iso_classes,
)
from .errors import *  # noqa: F401,F403
from .groups import FiniteGroup, catalog, cyclic, dihedral, direct_product, quaternion, symmetric_group
from .points import (
    IndexWitness,
    SplitEpi,
    group_index,
    induced_self_structure,
    is_natural,
    kernel_iso_implies_iso,
    model_index,
    split_epi,
)
from .relations import (
    ReflexiveRelation,
    check_autonomy_naturality,
    check_relation,
    is_acupuncturing_element,
    is_acupuncturing_split_epi,
    jointly_strongly_epic_check,
    maltsev_term,
    pullback,
    reflexive_relation,
)

__version__ = "0.1.0"
