"""Randomized streaming automata for word problems of finitely generated groups.

Machines decide whether a streamed word multiplies to the identity using
far less memory than the word's length, with a one-sided or bounded
two-sided error that is set at construction.  Exact oracles provide the
ground truth, combinators compose machines along group constructions,
and a harness measures error rates against stated bounds.
"""

from .ball import (BallAutomaton, GrowthTable, build_ball_automaton,
                   compute_ball, compute_growth, dfa_decide,
                   exhaustive_agreement)
from .combinators import (ChangeGeneratorsRecipe, DirectProductRecipe,
                          ExtensionData, FiniteExtensionRecipe,
                          FreeProductRecipe, WreathAbelianRecipe,
                          WreathFiniteRecipe, WreathZpkRecipe, WreathZpRecipe,
                          WreathZRecipe)
from .dsl import ElabConfig, GroupExpr, elaborate, parse_group_spec, to_text
from .errors import (AlphabetError, ConstructionError, DslError, FormatError,
                     GenerationError, ResourceLimitError, StreamOverflowError,
                     VerificationError, WordstreamError)
from .fingerprint import (LinearFingerprintRecipe, LinearFingerprintSpec,
                          NilpotentFingerprintRecipe, NilpotentFingerprintSpec,
                          free_fingerprint, line_fingerprint,
                          sanov_fingerprint)
from .harness import (ErrorReport, PairKind, disjointness_instance,
                      estimate_error, gen_word_pair, grigorchuk_instance,
                      wilson_halfwidth)
from .recipes import AbelianTrackerRecipe, FiniteTableRecipe
from .rng import Rng
from .streaming import DecisionResult, Recipe, StreamAutomaton, decide_identity
from .words import Alphabet, Letter, Word

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Letter", "Word", "Rng",
    "Recipe", "StreamAutomaton", "DecisionResult", "decide_identity",
    "LinearFingerprintSpec", "LinearFingerprintRecipe",
    "NilpotentFingerprintSpec", "NilpotentFingerprintRecipe",
    "sanov_fingerprint", "line_fingerprint", "free_fingerprint",
    "AbelianTrackerRecipe", "FiniteTableRecipe",
    "ChangeGeneratorsRecipe", "DirectProductRecipe", "ExtensionData",
    "FiniteExtensionRecipe", "FreeProductRecipe", "WreathAbelianRecipe",
    "WreathZRecipe", "WreathZpRecipe", "WreathZpkRecipe", "WreathFiniteRecipe",
    "BallAutomaton", "GrowthTable", "build_ball_automaton", "compute_ball",
    "compute_growth", "dfa_decide", "exhaustive_agreement",
    "PairKind", "ErrorReport", "estimate_error", "gen_word_pair",
    "disjointness_instance", "grigorchuk_instance", "wilson_halfwidth",
    "GroupExpr", "ElabConfig", "parse_group_spec", "to_text", "elaborate",
    "WordstreamError", "AlphabetError", "ConstructionError", "DslError",
    "FormatError", "GenerationError", "ResourceLimitError",
    "StreamOverflowError", "VerificationError",
    "__version__",
]
