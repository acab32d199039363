"""Finite fuzzy categories: arrows graded by plausibility degrees in [0, 1]."""

__version__ = "0.1.0"

from .analysis import (
    CommutationResult,
    IsoWitness,
    LimitMode,
    MonicEpicResult,
    commutation,
    find_initial,
    find_terminal,
    is_epic,
    is_monic,
    isomorphism_degree,
)
from .category import (
    Arrow,
    FuzzyCategory,
    LawMode,
    compose,
    compose_path,
    identity_of,
    opposite,
    validate_axioms,
)
from .constructions import (
    FreeCategory,
    FunctionTable,
    FuzzyRelation,
    MembershipTable,
    SostakAnnotation,
    free_fuzzy_category,
    fset_arrow_degree,
    fset_category,
    plausibility_annotation,
    preorder_category,
    sostak_check,
    unit_interval_category,
    validate_preorder,
)
from .degrees import Degree, TNorm, degree_min, format_degree, parse_degree, tnorm_apply
from .fileformats import parse_category_file, render_category
from .graph import FuzzyGraph, GraphArrow, Path, enumerate_paths, path_plausibility, validate_graph
from .violations import Violation
