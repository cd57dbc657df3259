"""Polynomial Collatz dynamics over GF(2)."""

from ._core import (
    Gf2CollatzError,
    Poly,
    certify_bound,
    concentration,
    decompose,
    fp_survey,
    fp_tau,
    hat_family,
    invert_parity_seq,
    orbit,
    parity_class_witness,
    parity_seq,
    prefix_limit_experiment,
    render_matrix,
    rho_exhaustive,
    rho_sample,
    search_automaton,
    star_transform,
    step,
    stopping_time,
    tau_a_from_seed,
    verify,
)

__all__ = [
    "Gf2CollatzError",
    "Poly",
    "certify_bound",
    "concentration",
    "decompose",
    "fp_survey",
    "fp_tau",
    "hat_family",
    "invert_parity_seq",
    "orbit",
    "parity_class_witness",
    "parity_seq",
    "prefix_limit_experiment",
    "render_matrix",
    "rho_exhaustive",
    "rho_sample",
    "search_automaton",
    "star_transform",
    "step",
    "stopping_time",
    "tau_a_from_seed",
    "verify",
]
