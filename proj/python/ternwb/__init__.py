"""Verification workbench for Z3-graded ternary algebras and the ternary oscillator.

The compiled core exposes exact cyclotomic scalars, the check suites, the
graded dimension census, and the sextic-oscillator numerics.
"""

from ._core import (
    Cyclo12,
    action_integral,
    en_coefficient,
    energy_levels,
    fd_sextic,
    gamma_closed_form,
    hilbert_dims,
    quotient_dim,
    records_json,
    run_suite,
    series_match,
    sextic_spectrum,
    surjection,
)

__version__ = "0.1.0"

__all__ = [
    "Cyclo12",
    "action_integral",
    "en_coefficient",
    "energy_levels",
    "fd_sextic",
    "gamma_closed_form",
    "hilbert_dims",
    "quotient_dim",
    "records_json",
    "run_suite",
    "series_match",
    "sextic_spectrum",
    "surjection",
    "__version__",
]
