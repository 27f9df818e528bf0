"""
Local cohomology slices, the Ext builder and the Taylor oracle.
"""
from regdim.homology.cech import build_degree_complex, local_cohomology_dim
from regdim.homology.ext import BoxModule, DegreeBox, build_ext_module, evaluate_at_degree
from regdim.homology.taylor import ext_hilbert_via_taylor, oracle_mismatches

__all__ = [
    'BoxModule',
    'DegreeBox',
    'build_degree_complex',
    'build_ext_module',
    'evaluate_at_degree',
    'ext_hilbert_via_taylor',
    'local_cohomology_dim',
    'oracle_mismatches',
]
