from ._badweave import (
    check_dual,
    check_simultaneous,
    construct,
    continued_fraction,
    derive_params,
    dual_from_simultaneous,
    simultaneous_from_dual,
)

__all__ = [
    "check_dual",
    "check_simultaneous",
    "construct",
    "continued_fraction",
    "derive_params",
    "dual_from_simultaneous",
    "simultaneous_from_dual",
]
