"""Exact arithmetic for trigonometric polynomial bases.

Chebyshev and spread polynomial families, pyramidal and Catalan
combinatorics, Riordan arrays, trigonometric power reduction, the super
Catalan moment matrix, and a machine-checkable battery for the
Goh-Wildberger factorization conjecture.  Everything runs in exact
integer or rational arithmetic; there is no floating point anywhere in a
verification path.
"""

from .checks import CheckFailure, CheckReport
from .combinatorics import (
    a014963,
    binomial,
    catalan,
    catalan_triangle_even,
    catalan_triangle_odd,
    central_binomial,
    fuss_catalan,
    moebius,
    pyramidal,
    totient,
)
from .chebyshev import (
    chebyshev_t,
    chebyshev_u,
    p_poly,
    t_closed_form,
    u_closed_form,
    v_poly,
)
from .factor import (
    ConjectureViolation,
    FactorTable,
    build_factor_table,
    extract_psi,
    golden_fixed_points,
    run_conjecture_battery,
)
from .fourier import super_catalan, trig_integral
from .laurent import Laurent, constant_term
from .poly import NotASquare, NotDivisible, Poly, exact_div, sqrt_exact
from .riordan import RiordanArray, lagrange_invert
from .rings import GaussianRational, GoldenInt
from .series import TruncSeries
from .spread import spread_poly, zpread_family, zpread_poly

__version__ = "0.1.0"

__all__ = [
    "CheckFailure",
    "CheckReport",
    "ConjectureViolation",
    "FactorTable",
    "GaussianRational",
    "GoldenInt",
    "Laurent",
    "NotASquare",
    "NotDivisible",
    "Poly",
    "RiordanArray",
    "TruncSeries",
    "a014963",
    "binomial",
    "build_factor_table",
    "catalan",
    "catalan_triangle_even",
    "catalan_triangle_odd",
    "central_binomial",
    "chebyshev_t",
    "chebyshev_u",
    "constant_term",
    "exact_div",
    "extract_psi",
    "fuss_catalan",
    "golden_fixed_points",
    "lagrange_invert",
    "moebius",
    "p_poly",
    "pyramidal",
    "run_conjecture_battery",
    "spread_poly",
    "sqrt_exact",
    "super_catalan",
    "t_closed_form",
    "totient",
    "trig_integral",
    "u_closed_form",
    "v_poly",
    "zpread_family",
    "zpread_poly",
]
