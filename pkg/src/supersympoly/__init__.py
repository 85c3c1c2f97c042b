"""Exact computer algebra for supersymmetric polynomials over F_p."""

from .errors import (
    DivisibilityError,
    InternalInvariantViolation,
    NotSupersymmetricError,
    NotSymmetricError,
    PolyParseError,
    RingMismatchError,
    SuperPolyError,
    ZeroPolynomialError,
)
from .poly_core import (
    Poly,
    Ring,
    constant,
    d_dT,
    exact_monomial_div,
    extend_with_t,
    homogeneous_components,
    monomial,
    one,
    parse_poly,
    poly_to_str,
    psi,
    set_xm_zero,
    set_yn_zero,
    substitute,
    t_power,
    t_var,
    x_var,
    y_var,
    zero,
)
from .symfun import (
    Block,
    Family,
    complete,
    elementary,
    expand_family_expr,
    is_symmetric,
    orbit_sym,
    rewrite_symmetric,
)
from .supersym import (
    MembershipVerdict,
    is_p_balanced,
    is_strictly_supersymmetric,
    is_supersymmetric,
)
from .generators import (
    DeltaSeq,
    KSeq,
    bracket_brace,
    bracket_round,
    bracket_square,
    c_r,
    enumerate_deltas,
    kseq,
    make_v,
    placed_sym,
    sigma_x_p,
    sigma_y_p,
    u_k,
    v_k,
    w_poly,
)
from .genexpr import (
    GenExpr,
    GenSpan,
    enumerate_gen_monomials,
    expand,
    parse_gen_expr,
    serialize_gen_expr,
)
from .decompose import (
    CoreFactorization,
    core_to_generators,
    decompose,
    factor_core,
    trace_decomposition,
    verify_decomposition,
    vk_gen_expr,
)
from .oracle import (
    DimReport,
    as_dimension,
    cr_generating_check,
    dim_grid,
    dim_reports_to_csv,
    generated_dimension,
    bracket_identity_check,
    psi_w_check,
)

__version__ = "0.1.0"
