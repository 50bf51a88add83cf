"""Exact and stable evaluation of P(U < V) and the combinatorics of its numerator."""

from .probability import (
    DuplicateDelta,
    MonteCarloResult,
    NotCoprime,
    VarianceProfile,
    barett_direct,
    monte_carlo,
    prob_stable,
    solve_bezout,
)
from .qseries import alpha, gaussian_binomial, lemma_lid_eval, q_newton_check
from .rsk import SquareFilling, ZeroOneMatrix, alternate_phi, knuth_forward, knuth_inverse, phi, phi_inverse
from .schur import F_from_barett, F_schur, count_square_fillings, enumerate_tableaux, schur_eval
from .tableaux import Column, Partition, Tabloid, YoungTableau, complement, complement_tableau, conjugate

__version__ = "0.1.0"

__all__ = [
    "alpha",
    "alternate_phi",
    "barett_direct",
    "Column",
    "complement",
    "complement_tableau",
    "conjugate",
    "count_square_fillings",
    "DuplicateDelta",
    "enumerate_tableaux",
    "F_from_barett",
    "F_schur",
    "gaussian_binomial",
    "knuth_forward",
    "knuth_inverse",
    "lemma_lid_eval",
    "monte_carlo",
    "MonteCarloResult",
    "NotCoprime",
    "Partition",
    "phi",
    "phi_inverse",
    "prob_stable",
    "q_newton_check",
    "schur_eval",
    "solve_bezout",
    "SquareFilling",
    "Tabloid",
    "VarianceProfile",
    "YoungTableau",
    "ZeroOneMatrix",
]
