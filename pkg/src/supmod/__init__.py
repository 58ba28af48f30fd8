"""Exact-rational computation with supermodular set functions."""

from .core import (
    ElementaryTriplet,
    SetFunction,
    StandardizationKind,
    VariableSet,
    all_triplets,
    carrier,
    delta,
    elementary_imset,
    inner_product,
    is_modular,
    is_submodular,
    is_supermodular,
    is_supermodular_bruteforce,
    modular_combination,
    semi_elementary_imset,
    standardize,
    superset_indicator,
    support,
    triplet_product,
)
from .analysis import (
    ExtremalityReport,
    FaceDescriptor,
    IndependencyModel,
    ScalarTable,
    face_of,
    independency_model,
    integral_representative,
    is_extreme,
    qualitatively_equivalent,
    quantitatively_equivalent,
    scalar_table,
)
from .transforms import (
    coarsen,
    contract,
    lift,
    lower_modular_extension,
    lower_replication,
    max_minor,
    mean_minor,
    minor,
    monotonize_max_sub,
    monotonize_max_sup,
    outer_compose,
    permute,
    pointwise_multiply,
    predict_model,
    product_compose,
    reflect,
    upper_modular_extension,
    upper_replication,
)
from .rays import (
    Orbit,
    RayCatalogue,
    bruteforce_extreme_rays,
    classify_orbits,
    enumerate_extreme_rays,
    verify_catalogue,
)
from .documents import (
    DocumentError,
    parse_set_function,
    parse_set_function_text,
    serialize_set_function,
    set_function_text,
)

__version__ = "0.1.0"
