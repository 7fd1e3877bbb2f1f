"""Weighted sparse sums and discrete Fourier transforms over integer nodes."""

from ._sparsesum import (
    SparsesumError,
    assemble_weights,
    brute_force_dft,
    cosine_transform,
    dft,
    exact_value,
    example2,
    example3,
    faulhaber,
    hybrid_nodes,
    lorentzian_nodes,
    panel_weights,
    q_sequence,
    resonant_segments,
    run_zeta,
    series_sum,
    sine_transform,
    verify,
    y_triple,
)

__all__ = [
    "SparsesumError",
    "assemble_weights",
    "brute_force_dft",
    "cosine_transform",
    "dft",
    "exact_value",
    "example2",
    "example3",
    "faulhaber",
    "hybrid_nodes",
    "lorentzian_nodes",
    "panel_weights",
    "q_sequence",
    "resonant_segments",
    "run_zeta",
    "series_sum",
    "sine_transform",
    "verify",
    "y_triple",
]
