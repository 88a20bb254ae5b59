"""Exact polynomial analysis: difference quotients, monotonicity, real cubic roots."""

from .exact_arith import (
    BivariateQuotient,
    Polynomial,
    Rational,
    formal_derivative,
    parse_polynomial,
    poly_eval,
    poly_scale_arg,
    poly_shift,
)
from .root_oracle import (
    NEG_INF,
    POS_INF,
    Approx,
    Exact,
    IsolatingInterval,
    SturmChain,
    bisect_refine,
    cauchy_bound,
    isolate_real_roots,
    sturm_count,
)
from .fermat_analysis import (
    Direction,
    MonotonicityDecomposition,
    certify_direction,
    fermat_derivative,
    fermat_quotient,
    monotonicity_intervals,
)
from .cubic_vieta import (
    Classification,
    Cubic,
    DepressedCubic,
    Kind,
    NoRealPair,
    NoRealTriple,
    RootTriple,
    classify,
    depress,
    discriminant_value,
    sign_product_at_critical,
    solve_cubic,
    solve_quadratic_vieta,
    vieta_expand,
)

__version__ = "0.1.0"
