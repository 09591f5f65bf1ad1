"""Regular hypermaps with simple underlying hypergraphs.

The package enumerates finite permutation groups, models regular hypermaps
as groups with a distinguished involution triple, tests simplicity of the
underlying hypergraph by two independent routes, constructs the seven
affine group families of degree p^2 together with the known simple
hypermaps on them, and classifies all simple regular hypermaps a group
carries up to equivalence.
"""

from .classify import (
    ClassificationReport,
    classify,
    condition_ledger,
    enumerate_candidates,
    involution_class_reps,
    involutions,
    survey_triples,
    triples_equivalent,
    verify_catalog,
)
from .errors import (
    BadDivisor,
    CapExceeded,
    DegreeMismatch,
    DuplicatePoint,
    GroupFileError,
    HypermapsError,
    InternalError,
    InvalidFamilyParams,
    NotABijection,
    NotGenerating,
    NotInvolution,
    NotPrime,
    ParityMismatch,
    ParseError,
    PointOutOfRange,
    VerificationFailure,
)
from .families import (
    FAMILIES,
    TRIPLE_LABELS,
    FamilyGroup,
    FamilyParams,
    build_family,
    family_generators,
    known_triple,
    label_n_values,
    legal_n_values,
    legal_params,
)
from .gf import diag_param, norm_one_element, primitive_root
from .group import (
    DEFAULT_CAP,
    ElementSet,
    GroupTable,
    SubgroupHandle,
    conjugate_subgroup,
    core,
    group_generate,
    intersect,
    right_cosets,
    set_product,
    subgroup_generate,
)
from .hypergraph import Hypergraph, LeviGraph, levi_dot, levi_graph
from .hypermap import (
    Hypermap,
    HypermapType,
    InvolutionTriple,
    hypermap_build,
    orientable,
    underlying_hypergraph,
)
from .perm import (
    Permutation,
    compose,
    element_order,
    inverse,
    perm_from_cycles,
    perm_from_images,
)
from .simplicity import (
    edge_multiplicity,
    edge_multiplicity_direct,
    faithful_on_vertices,
    flag_condition,
    hypergraph_simple_direct,
    is_simple,
    proviso_ok,
)
from .affine import AffineMap

__version__ = "0.1.0"
