"""Continued-fraction corrections for the Landau, Lebesgue and
Euler-Mascheroni constants.

Thin wrapper over the C++ core: exact coefficient derivation, arbitrary-
precision evaluation and interval-certified inequality checks. Exact values
travel as strings ("p/q" rationals, canonical Q(pi) expressions); enclosures
as (lo, hi) decimal string pairs.
"""

import json as _json

try:
    from ._mcfrac import (  # noqa: F401
        bernoulli,
        brouncker_q,
        const_c0,
        const_c1,
        derive_json,
        error_term,
        euler_gamma,
        evaluate_cf,
        harmonic,
        landau_g,
        lebesgue_bounds,
        lebesgue_quadrature,
        rate_json,
        verify_theorem_json,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _mcfrac import (  # noqa: F401
        bernoulli,
        brouncker_q,
        const_c0,
        const_c1,
        derive_json,
        error_term,
        euler_gamma,
        evaluate_cf,
        harmonic,
        landau_g,
        lebesgue_bounds,
        lebesgue_quadrature,
        rate_json,
        verify_theorem_json,
    )

__all__ = [
    "bernoulli",
    "brouncker_q",
    "const_c0",
    "const_c1",
    "derive",
    "derive_json",
    "error_term",
    "euler_gamma",
    "evaluate_cf",
    "harmonic",
    "landau_g",
    "lebesgue_bounds",
    "lebesgue_quadrature",
    "rate",
    "rate_json",
    "verify_theorem",
    "verify_theorem_json",
]


def derive(family, depth, uncertified=False, bits=192):
    """Derived correction coefficients as a dict (parsed canonical JSON)."""
    return _json.loads(derive_json(family, depth, uncertified, bits))


def verify_theorem(theorem, n_max, bits=192):
    """Inequality certification report as a dict."""
    return _json.loads(verify_theorem_json(theorem, n_max, bits))


def rate(family, depth, n_max=1024, bits=192):
    """Empirical convergence-rate fit as a dict."""
    return _json.loads(rate_json(family, depth, n_max, bits))
