"""Exact-arithmetic toolkit for the para-Bannai-Ito polynomial families.

Four finite families (even/odd length, even/odd j) built on exact rational
arithmetic: three-term recurrences, explicit Pochhammer-sum evaluation,
Dunkl-difference bispectrality, bi-lattice orthogonality data, and
limits/reductions to neighbouring families.
"""

from .exactpoly import (
    Fraction,
    ONE,
    Poly,
    X,
    ZERO,
    format_rational,
    monic_from_factors,
    parse_rational,
    poch,
    poch_many,
)
from .families import (
    FamilyCase,
    GeneralCBIParams,
    JacobiMatrix,
    ParamSet,
    PositivityReport,
    QParaRacahParams,
    SingularParameterError,
    bi_polys_para_limit,
    cbi_coeffs_para_limit,
    cbi_polys_para_limit,
    check_positivity,
    diagonal,
    general_bi_coeffs,
    general_bi_polys,
    general_cbi_coeffs,
    general_cbi_polys,
    generate_polys,
    jacobi,
    offdiagonal,
    para_coeffs,
    qpr_coeffs,
    qpr_from_para,
    recurrence_a,
    recurrence_c,
)
from .explicit import (
    DegenerateDeformationError,
    explicit_eval,
    explicit_eval_series,
    hypergeo_4F3,
)
from .dunkl import (
    OperatorSpec,
    PoleError,
    apply_operator,
    eigenvalue,
    operator_for,
    verify_bispectrality,
)
from .spectra import (
    ClosedWeights,
    Grid,
    SpectralData,
    char_poly_product,
    grid,
    grid_char_poly,
    h2_closed,
    norms,
    persymmetry_check,
    spectral_data,
    verify_orthogonality,
    weights_closed,
    weights_direct,
)
from .limits import (
    LatticeSpacings,
    LimitStudy,
    krawtchouk_monic,
    lattice_spacings,
    limit_study,
    qpr_scaled_coeffs,
    reduction_general_cbi,
    reduction_krawtchouk,
)

__version__ = "0.1.0"
