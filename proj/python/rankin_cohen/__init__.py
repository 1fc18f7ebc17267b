"""Exact Rankin-Cohen brackets of Jacobi and degree-2 Siegel forms."""

from ._core import (
    FormatError,
    JacobiSeries,
    SiegelSeries,
    bracket_jacobi,
    bracket_siegel,
    check_recursions,
    crosscheck,
    disc_class_invariant,
    eisenstein,
    export_jacobi,
    export_siegel,
    heat,
    import_jacobi,
    import_siegel,
    jacobi_theta,
    mul,
    rank_over_x,
    set_thread_count,
    siegel_theta,
    thread_count,
    verify,
)

__all__ = [
    "FormatError",
    "JacobiSeries",
    "SiegelSeries",
    "bracket_jacobi",
    "bracket_siegel",
    "check_recursions",
    "crosscheck",
    "disc_class_invariant",
    "eisenstein",
    "export_jacobi",
    "export_siegel",
    "heat",
    "import_jacobi",
    "import_siegel",
    "jacobi_theta",
    "mul",
    "rank_over_x",
    "set_thread_count",
    "siegel_theta",
    "thread_count",
    "verify",
]
