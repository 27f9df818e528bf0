"""
Stanley filtrations, Betti tables and regularity of Ext modules.
"""
from regdim.filtration.betti import BettiTable, koszul_betti, regularity
from regdim.filtration.stanley import (
    StanleyDecomposition,
    StanleyPair,
    build_stanley_decomposition,
    filtration_reg_bound,
    krull_dimension,
    verify_filtration,
)

__all__ = [
    'BettiTable',
    'StanleyDecomposition',
    'StanleyPair',
    'build_stanley_decomposition',
    'filtration_reg_bound',
    'koszul_betti',
    'krull_dimension',
    'regularity',
    'verify_filtration',
]
