"""Exact linear algebra for monomial complete intersections.

Multiplication matrices of powers of a linear form, strong Lefschetz
verdicts over Q and F_p, a block-recursive fast path for square-free
algebras, and the embedding of a general monomial complete intersection
into a square-free one.
"""
from .monomials import (
    BasisIndex,
    Monomial,
    enumerate_squarefree,
    revlex_compare,
    revlex_sort_key,
    squarefree_rank,
    squarefree_unrank,
)
from .quotient import (
    AlgebraElement,
    AlgebraSpec,
    HilbertVector,
    basis_positions,
    graded_basis,
    hilbert_vector,
    multiply,
    reduce,
)
from .exactmat import (
    GF,
    QQ,
    ZZ,
    ExactMatrix,
    RankResult,
    block_assemble,
    certified_rank,
    determinant,
    mat_mul,
    rank,
    rank_fraction_free,
    rank_mod_p,
    scale,
)
from .lefschetz import (
    CharProbe,
    LefschetzReport,
    LinearForm,
    MapCheck,
    MultiplicationMatrix,
    build_matrix,
    char_search,
    full_pairs,
    max_rank_check,
    middle_pairs,
    slp_check,
)
from .blockrec import (
    BlockDecomposition,
    block_pivot_rank,
    decompose,
    recursive_middle_rank,
)
from .embedding import (
    DegreeRankRecord,
    EmbeddedMapCheck,
    EmbeddingSpec,
    KernelDimsRecord,
    SocleImageRecord,
    TransferRecord,
    phi,
    phi_matrix,
    phi_monomial,
    transfer_slp,
    verify_kernel_dims,
    verify_socle_image,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "BasisIndex",
    "BlockDecomposition",
    "CharProbe",
    "DegreeRankRecord",
    "EmbeddedMapCheck",
    "EmbeddingSpec",
    "ExactMatrix",
    "GF",
    "HilbertVector",
    "KernelDimsRecord",
    "LefschetzReport",
    "LinearForm",
    "MapCheck",
    "Monomial",
    "MultiplicationMatrix",
    "QQ",
    "RankResult",
    "SocleImageRecord",
    "TransferRecord",
    "ZZ",
    "basis_positions",
    "block_assemble",
    "block_pivot_rank",
    "build_matrix",
    "certified_rank",
    "char_search",
    "decompose",
    "determinant",
    "enumerate_squarefree",
    "full_pairs",
    "graded_basis",
    "hilbert_vector",
    "mat_mul",
    "max_rank_check",
    "middle_pairs",
    "multiply",
    "phi",
    "phi_matrix",
    "phi_monomial",
    "rank",
    "rank_fraction_free",
    "rank_mod_p",
    "recursive_middle_rank",
    "reduce",
    "revlex_compare",
    "revlex_sort_key",
    "scale",
    "slp_check",
    "squarefree_rank",
    "squarefree_unrank",
    "transfer_slp",
    "verify_kernel_dims",
    "verify_socle_image",
]
