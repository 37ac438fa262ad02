"""piwgen: exhaustive generation and exact classification of integer
weighing matrices up to Hadamard and transpose-Hadamard equivalence."""

from .canon import (
    CanonResult,
    canonical_form,
    fast_minclass,
    is_minimal,
    minclass,
    neg_normalize,
    ord_normalize,
)
from .classify import (
    BlockDecomposition,
    ClassificationReport,
    HClass,
    THClass,
    block_sum,
    build_report,
    decompose,
    dedup_h_classes,
    dedup_th_classes,
    primitive_catalog,
    structure_label,
    th_canonical,
)
from .core import (
    HadamardPair,
    Matrix,
    Monomial,
    Row,
    apply_hadamard,
    augment,
    gram,
    is_piw,
    matrix,
    prefix,
    row_lex_compare,
    transpose,
)
from .invariant import CodeInvariant, code, code_invariant, decode, partition_by_invariant
from .kernels import BACKEND
from .nsoks import SquareRep, expand, format_rep, nsoks, rep_to_minimal_row
from .pipeline import PipelineConfig, run_pipeline
from .search import Reservoir, rep_piw, signed_perms

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BlockDecomposition",
    "CanonResult",
    "ClassificationReport",
    "CodeInvariant",
    "HClass",
    "HadamardPair",
    "Matrix",
    "Monomial",
    "PipelineConfig",
    "Reservoir",
    "Row",
    "SquareRep",
    "THClass",
    "apply_hadamard",
    "augment",
    "block_sum",
    "build_report",
    "canonical_form",
    "code",
    "code_invariant",
    "decode",
    "decompose",
    "dedup_h_classes",
    "dedup_th_classes",
    "expand",
    "fast_minclass",
    "format_rep",
    "gram",
    "is_minimal",
    "is_piw",
    "matrix",
    "minclass",
    "neg_normalize",
    "nsoks",
    "ord_normalize",
    "partition_by_invariant",
    "prefix",
    "primitive_catalog",
    "rep_piw",
    "rep_to_minimal_row",
    "row_lex_compare",
    "run_pipeline",
    "signed_perms",
    "structure_label",
    "th_canonical",
    "transpose",
]
