"""
Combinatorics of transmission loci for covers of the projective line that
are totally ramified at two points.

Submodules:
  affine_perm    windows, composition, shift and slipface functions
  demazure       Bruhat order via essential sets and the Demazure product
  words          k-inversions, reduced words, truncations and braid moves
  twists         essential twists and the non-colliding condition
  loci           locus profiles, covers, splitting types and shuffle posets
  degeneration   strata, ramification schedules and degree distributions
  hurwitz        monodromy tuples, braid moves and orbit classification
  cli            the ``tloci`` command
"""

from .affine_perm import AffinePermutation, from_window, identity, simple_reflection
from .demazure import bruhat_leq, demazure_product
from .hurwitz import MonodromyTuple, classify, from_text, standardize
from .words import ReducedWord, inversion_count, k_inversions, reduced_words

__version__ = "0.1.0"

__all__ = [
    "AffinePermutation", "from_window", "identity", "simple_reflection",
    "bruhat_leq", "demazure_product", "MonodromyTuple", "classify",
    "from_text", "standardize", "ReducedWord", "inversion_count",
    "k_inversions", "reduced_words", "__version__",
]
