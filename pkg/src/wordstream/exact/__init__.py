"""Exact group oracles with plain-data elements."""

from .base import ExactGroup
from .free import FreeGroup
from .abelian import FreeAbelianGroup, CyclicGroup
from .matrixgrp import (
    MatrixGroupQ,
    UTMatrixGroup,
    MatrixGroupPoly,
    identity_matrix,
    mat_mul,
    mat_inv,
    is_unitriangular,
    sanov_gens,
    sl2_gens,
    SL2_RELATORS,
    heisenberg_gens,
    HEISENBERG_RELATORS,
    dinf_gens,
    DINF_RELATORS,
)
from .finite import FiniteGroup, symmetric_group_3
from .free_product import FreeProductGroup
from .product import DirectProductGroup
from .wreath import WreathGroup
from .grigorchuk import (
    GrigorchukGroup,
    reduce_word,
    gen_permutation,
    word_permutation,
)

__all__ = [
    "ExactGroup",
    "FreeGroup",
    "FreeAbelianGroup",
    "CyclicGroup",
    "MatrixGroupQ",
    "UTMatrixGroup",
    "MatrixGroupPoly",
    "identity_matrix",
    "mat_mul",
    "mat_inv",
    "is_unitriangular",
    "sanov_gens",
    "sl2_gens",
    "SL2_RELATORS",
    "heisenberg_gens",
    "HEISENBERG_RELATORS",
    "dinf_gens",
    "DINF_RELATORS",
    "FiniteGroup",
    "symmetric_group_3",
    "FreeProductGroup",
    "DirectProductGroup",
    "WreathGroup",
    "GrigorchukGroup",
    "reduce_word",
    "gen_permutation",
    "word_permutation",
]
