"""Ready-made (oracle, recipe) pairs for groups used throughout the package."""

from __future__ import annotations

from .combinators import ExtensionData, FiniteExtensionRecipe
from .exact.abelian import FreeAbelianGroup
from .exact.finite import symmetric_group_3
from .exact.free import FreeGroup
from .exact.grigorchuk import GrigorchukGroup
from .exact.matrixgrp import (DINF_RELATORS, HEISENBERG_RELATORS, SL2_RELATORS,
                              MatrixGroupQ, UTMatrixGroup, dinf_gens,
                              heisenberg_gens, sl2_gens)
from .exact.wreath import WreathGroup
from .fingerprint import (LinearFingerprintRecipe, LinearFingerprintSpec,
                          NilpotentFingerprintRecipe, NilpotentFingerprintSpec,
                          line_fingerprint, sanov_fingerprint)
from .words import Alphabet


def sanov_pair(c: int = 1):
    """Rank-2 free group: free oracle plus the SL2(Z) fingerprint."""
    return FreeGroup(("a", "b")), sanov_fingerprint(c)


def heisenberg_pair(c: int = 2):
    oracle = UTMatrixGroup(heisenberg_gens(), relator_words=HEISENBERG_RELATORS)
    spec = NilpotentFingerprintSpec(heisenberg_gens(), c=c)
    return oracle, NilpotentFingerprintRecipe(spec)


def sl2_pair(c: int = 1):
    oracle = MatrixGroupQ(sl2_gens(), relator_words=SL2_RELATORS)
    spec = LinearFingerprintSpec.from_matrix_group(oracle, c)
    return oracle, LinearFingerprintRecipe(spec)


def grigorchuk_pair():
    """Oracle only; no sublinear machine is provided for this group."""
    return GrigorchukGroup(), None


def dinf_extension() -> ExtensionData:
    """Index-2 coset data for the infinite dihedral group over <r>."""
    outer = Alphabet(("r", "s"), self_inverse=("s",))
    sub = Alphabet(("r",))
    r = outer.letter("r")
    ri = outer.inverse(r)
    s = outer.letter("s")
    sr = sub.letter("r")
    sri = sub.inverse(sr)
    reps = ((), (s,))
    conj = {(r, 0): (sr,), (ri, 0): (sri,),
            (r, 1): (sri,), (ri, 1): (sr,)}
    mult = {(s, 0): ((), 1), (s, 1): ((), 0)}
    return ExtensionData(outer, sub, reps, conj, mult)


def dihedral_inf_pair(c: int = 4):
    oracle = MatrixGroupQ(dinf_gens(), relator_words=DINF_RELATORS)
    ext = dinf_extension()
    ext.verify(oracle)
    recipe = FiniteExtensionRecipe(line_fingerprint(c, "r"), ext)
    return oracle, recipe


def s3_wreath_z() -> WreathGroup:
    """S3 wr Z: nonabelian finite lamps over an integer cursor, oracle only.

    The canonical source of disjointness instances; abelian lamps make
    every such instance trivially the identity.
    """
    return WreathGroup(symmetric_group_3(), FreeAbelianGroup(("z",)))
