"""Exact q-calculus kernel for generalized q-Bernoulli and q-Genocchi
polynomials, with a zero-tolerance identity verification suite."""

from .qarith import (
    QContext,
    Scalar,
    format_rational,
    parse_rational,
    q_add_pow,
    q_binomial,
    q_factorial,
    q_number,
    q_pochhammer,
    triangular,
)
from .qpoly import (
    BiPoly,
    poly_eval,
    poly_substitute_scaled,
    q_add_pow_poly,
    q_derivative_x,
    q_derivative_y,
)
from .qseries import (
    BIPOLY_RING,
    SCALAR_RING,
    FactorialForm,
    Ring,
    Series,
    from_factorial_form,
    lift_to_bipoly,
    q_exp_big,
    q_exp_big_var,
    q_exp_small,
    q_exp_small_var,
    to_factorial_form,
)
from .families import (
    FamilyId,
    FamilyKind,
    FamilyTable,
    appell_poly,
    build_table,
    classical_bernoulli,
    classical_genocchi,
    compute_numbers,
    compute_polys_direct,
    compute_polys_summation,
)
from .identities import (
    Grid,
    TableSet,
    VerdictReport,
    all_pass,
    build_tables,
    run_all,
    run_suites,
    verify_classical_limits,
    verify_corollaries,
    verify_corollary4_as_printed,
    verify_property1,
    verify_property2,
    verify_property3,
    verify_property4,
    verify_property5,
    verify_property6,
    verify_theorem_sp1,
    verify_theorem_sp11,
)

__version__ = "0.1.0"

__all__ = [
    "BIPOLY_RING",
    "BiPoly",
    "FactorialForm",
    "FamilyId",
    "FamilyKind",
    "FamilyTable",
    "Grid",
    "QContext",
    "Ring",
    "SCALAR_RING",
    "Scalar",
    "Series",
    "TableSet",
    "VerdictReport",
    "all_pass",
    "appell_poly",
    "build_table",
    "build_tables",
    "classical_bernoulli",
    "classical_genocchi",
    "compute_numbers",
    "compute_polys_direct",
    "compute_polys_summation",
    "format_rational",
    "from_factorial_form",
    "lift_to_bipoly",
    "parse_rational",
    "poly_eval",
    "poly_substitute_scaled",
    "q_add_pow",
    "q_add_pow_poly",
    "q_binomial",
    "q_derivative_x",
    "q_derivative_y",
    "q_exp_big",
    "q_exp_big_var",
    "q_exp_small",
    "q_exp_small_var",
    "q_factorial",
    "q_number",
    "q_pochhammer",
    "run_all",
    "run_suites",
    "to_factorial_form",
    "triangular",
    "verify_classical_limits",
    "verify_corollaries",
    "verify_corollary4_as_printed",
    "verify_property1",
    "verify_property2",
    "verify_property3",
    "verify_property4",
    "verify_property5",
    "verify_property6",
    "verify_theorem_sp1",
    "verify_theorem_sp11",
    "__version__",
]
