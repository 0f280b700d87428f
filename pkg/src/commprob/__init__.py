"""commprob: exact commuting probabilities and structural invariants of
small finite permutation groups, with a verification harness for the
supersolvability and class-size threshold statements."""

from .perm import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupError,
    OrderCapExceeded,
    Permutation,
    compose,
    element_order,
    generate_group,
)
from .structure import (
    ConjugacyClass,
    NotNormal,
    Subgroup,
    as_group,
    center,
    centralizer,
    classes_inside,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    find_complement,
    is_abelian,
    is_nilpotent,
    is_normal,
    is_solvable,
    is_supersolvable,
    lower_central_series,
    minimal_normal_subgroups,
    normal_closure,
    normal_subgroups,
    quotient,
    subgroup_generated,
)
from .probability import (
    DEFAULT_ORACLE_CAP,
    GallagherResult,
    average_class_size,
    check_character_bound,
    class_count,
    commuting_pairs_oracle,
    commuting_probability,
    derived_order_bound_witness,
    gallagher_check,
)
from .isomorphism import are_isomorphic, find_isomorphism, iter_isomorphisms
from .isoclinism import (
    IsoclinismWitness,
    PairingStructure,
    are_isoclinic,
    commutator_pairing,
    find_isoclinism,
    is_stem,
    verify_isoclinism_witness,
)
from .constructors import (
    ActionSpec,
    automorphism_from_generator_images,
    automorphism_group,
    catalog,
    catalog_keys,
    cyclic,
    direct_product,
    named,
    semidirect_product,
    trivial_action,
)
from .theorems import (
    GroupReport,
    Verdict,
    analyze,
    run_catalog_verification,
    verify_class_size_theorem,
    verify_klein_fixed_point,
    verify_odd_35_243,
    verify_supersolvable_1_3,
    verify_supersolvable_5_16,
)

__version__ = "0.1.0"
