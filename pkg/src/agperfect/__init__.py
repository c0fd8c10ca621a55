"""Perfectness of the annihilating-ideal graph AG(Z_n).

Builds AG(Z_n) from the factorization (or just the exponent signature) of n,
decides perfectness by the closed-form classification and independently by
exhaustive odd hole / antihole search, and produces checkable certificates.
"""

from .aggraph import AGGraph, adjacent, build, complement_adjacent, degree_profile
from .factoring import Factorization, Signature, factor, proper_divisor_vectors, signature
from .harness import SweepConfig, SweepRow, enumerate_signatures, run_sweep
from .holes import BergeVerdict, HoleWitness, find_induced_odd_hole, is_berge, verify_witness
from .invariants import InvariantReport, chromatic_number, clique_number, compute_invariants
from .theorem import Form, Verdict, classify, decide, is_perfect_theorem, lemma_witness

__all__ = [
    "AGGraph", "BergeVerdict", "Factorization", "Form", "HoleWitness",
    "InvariantReport", "Signature", "SweepConfig", "SweepRow", "Verdict",
    "adjacent", "build", "chromatic_number", "classify", "clique_number",
    "complement_adjacent", "compute_invariants", "decide", "degree_profile",
    "enumerate_signatures", "factor", "find_induced_odd_hole", "is_berge",
    "is_perfect_theorem", "lemma_witness", "proper_divisor_vectors",
    "run_sweep", "signature", "verify_witness",
]
