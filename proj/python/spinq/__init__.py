"""Quantumness of spin-1 states.

Thin wrapper around the compiled extension module `_spinq`.
"""

from ._spinq import (
    bloch_matrix,
    ccs_of_pure,
    coherent_amplitudes,
    concurrence,
    ell,
    f_quantumness,
    is_classical,
    lower_bound,
    min_bloch_eig,
    negativity,
    quantumness,
    random_hs_density,
    schema_version,
)

__all__ = [
    "bloch_matrix",
    "ccs_of_pure",
    "coherent_amplitudes",
    "concurrence",
    "ell",
    "f_quantumness",
    "is_classical",
    "lower_bound",
    "min_bloch_eig",
    "negativity",
    "quantumness",
    "random_hs_density",
    "schema_version",
]
