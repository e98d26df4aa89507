"""Exact umbral representations of Bernoulli, Euler and Hermite families.

Values are computed in exact Gaussian-rational arithmetic both classically
and as expectations over concrete random variables; identities are checked
exactly, and distributional claims by seeded Monte Carlo.
"""

from .errors import (
    CompositionNonNilpotent,
    DegreeOverflow,
    DivisionByNonUnit,
    MomentTooHigh,
    QuadratureNonConvergent,
    TruncationOverflow,
    UmbralError,
    UnboundSymbol,
)
from .exact import I, ONE, ZERO, ExactScalar
from .expectation import Binding, UmbralExpr, expect, expect_exp_gauss, expect_exp_quadratic
from .families import (
    bernoulli_number,
    bernoulli_poly,
    carlitz_hermite,
    chen_k,
    euler_number,
    euler_poly,
    hermite,
    power_sum,
    zeilberger_hermite,
)
from .identities import Bounds, IdentityId, IdentityReport, verify, verify_all
from .poly import MultiPoly
from .series import TruncSeries
from .umbrae import CIRC_Z, GAUSS_M, L, L0, UmbraSpec, moment

__version__ = "0.1.0"
