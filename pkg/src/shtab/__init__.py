"""Shifted tableau combinatorics: jeu de taquin, switching, evacuation, Bender-Knuth moves, growth diagrams."""

from .bender_knuth import GeneratorWord, evaluate, promotion, q, q_ij, t, verify_relations
from .evacuation import eta, eta_ij, evac, evac_k, reversal, reversal_switching, sigma, tilde_evac
from .jdt import complement, inner_slide, outer_slide, rectify
from .shapes import Letter, Permutation, SkewShape, StrictPartition, Word
from .switching import PerforatedPair, infusion, sw
from .tableau import RawFilling, ShiftedTableau, enumerate_tableaux, lr_coefficient, sstd, std

__all__ = [
    "GeneratorWord", "Letter", "PerforatedPair", "Permutation", "RawFilling", "ShiftedTableau",
    "SkewShape", "StrictPartition", "Word", "complement", "enumerate_tableaux", "eta", "eta_ij",
    "evac", "evac_k", "evaluate", "infusion", "inner_slide", "lr_coefficient", "outer_slide",
    "promotion", "q", "q_ij", "rectify", "reversal", "reversal_switching", "sigma", "sstd", "std",
    "sw", "t", "tilde_evac", "verify_relations",
]
