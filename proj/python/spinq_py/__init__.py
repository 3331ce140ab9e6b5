"""Exact Schur Q-function, Kostka polynomial and seminormal module computations."""

from ._spinq import (
    char_table,
    degree,
    fake_degree,
    hooks,
    kostka,
    partitions,
    qexpand,
    schur_coeffs,
    seminormal,
    spin_fake_degree,
    spin_kostka,
    spin_kostka_matrix,
    standard_shifted_count,
    verify,
)

__all__ = [
    "char_table",
    "degree",
    "fake_degree",
    "hooks",
    "kostka",
    "partitions",
    "qexpand",
    "schur_coeffs",
    "seminormal",
    "spin_fake_degree",
    "spin_kostka",
    "spin_kostka_matrix",
    "standard_shifted_count",
    "verify",
]
