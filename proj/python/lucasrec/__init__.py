"""Exact linear recurrence toolkit."""

from ._core import (
    Error,
    bell_partial,
    catalog_get,
    catalog_names,
    char_poly_of_power,
    fit_recurrence,
    gamma_coefficients,
    gamma_symbolic,
    hat_from_gamma,
    lucas_transform,
    partial_sum_closed,
    progression_sum,
    seq_eval,
    seq_range,
    subseq_recurrence,
)

__all__ = [
    "Error",
    "bell_partial",
    "catalog_get",
    "catalog_names",
    "char_poly_of_power",
    "fit_recurrence",
    "gamma_coefficients",
    "gamma_symbolic",
    "hat_from_gamma",
    "lucas_transform",
    "partial_sum_closed",
    "progression_sum",
    "seq_eval",
    "seq_range",
    "subseq_recurrence",
]
