"""Explicit conditional bounds for Selberg-class L-functions and the
numerical machinery to verify them at desk scale.

The package splits into: descriptors (functional-equation data and builtin
instances), arithmetic (sieve tables and exact prime sums), kernel (the
closed-form constants of the bound statements), bounds (the certified
theorem/corollary assemblies), explicit_formula (majorant, zero sums and
identity residuals), lfunc (independent high-precision evaluation of zeta
and Dirichlet L), optimize (parameter optimization), and cli.
"""

__version__ = "0.1.0"

from .descriptors import (                                      # noqa: F401
    DirichletCharacter,
    EvaluationPoint,
    LFunctionDescriptor,
    builtin,
    dirichlet_descriptor,
    load_descriptor_config,
    log_tau,
    make_descriptor,
    product_descriptor,
    zeta_descriptor,
)
from .arithmetic import (                                       # noqa: F401
    ArithmeticTables,
    build_tables,
    prime_coefficient_stats,
    psi,
    psi_tilde,
    s_exact,
    s_hat_and_ex_exact,
    select_xy,
)
from .bounds import (                                           # noqa: F401
    BoundParameters,
    BoundResult,
    asymptotic_main_terms,
    bound_line1,
    bound_main,
    bound_real_point,
    dedekind_residue_bound,
    family_cor10,
    prime_term_bound,
    r_terms,
    zero_sum_bound,
    zeta_cor9,
)
from .explicit_formula import (                                 # noqa: F401
    MajorantSpec,
    ZeroDataset,
    f_a,
    guinand_weil_residual,
    h_hat,
    h_hat0,
    majorant_h,
    selberg_rhs,
    zero_sum,
)
from .lfunc import (                                            # noqa: F401
    EvalConfig,
    dirichlet_logderiv,
    dirichlet_value,
    load_zeros,
    log_zeta_tracked,
    zeta_deriv,
    zeta_logderiv,
    zeta_value,
)
from .optimize import (                                         # noqa: F401
    OptimizationReport,
    golden_section,
    minimize_bound,
    optimize_nu,
    solve_alpha0,
)
