"""Exact q-deformed spinor calculus over SL_q(2)."""

from ._core import (
    Poly,
    algebra_names,
    bar_sigma,
    basic_integer,
    dmatrix,
    emit,
    eta,
    normalize,
    parse_tree,
    reference_eta,
    q_binomial,
    suite_names,
    verify,
)

__all__ = [
    "Poly",
    "algebra_names",
    "bar_sigma",
    "basic_integer",
    "dmatrix",
    "emit",
    "eta",
    "normalize",
    "parse_tree",
    "reference_eta",
    "q_binomial",
    "suite_names",
    "verify",
]
