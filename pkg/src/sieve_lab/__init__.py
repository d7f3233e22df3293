"""sieve-lab: numerical laboratory for large sieve constants with power moduli."""

from .arith import ApproxPair, Rational, dirichlet_approx, e_of, nearest_int_distance, reduce
from .bounds import (
    BoundParams,
    CrossoverReport,
    FitResult,
    ScanRecord,
    SHAPE_NAMES,
    bound_conjecture,
    bound_delta,
    bound_kappa,
    bound_loglog,
    bound_standard_ls,
    crossover_analysis,
    evaluate_bounds,
    fit_exponent,
    shape_value,
)
from .errors import CapacityError, EigensolverError, VerificationError
from .expsums import (
    MajorantResult,
    MonomialPhase,
    fourier_majorant,
    min_sum,
    min_sum_bound,
    phi_hat,
    phi_kernel,
    weyl_min_sum_bound,
    weyl_pair_bound,
    weyl_sum,
)
from .farey import (
    MODULUS_CAP,
    PowerFareySystem,
    count_near,
    counting_rhs,
    enumerate_system,
    stieltjes_integral,
)
from .sieve import (
    CoefficientVector,
    ToeplitzKernel,
    dense_lambda_max,
    lambda_max,
    measure_constant,
    power_iteration,
    rayleigh_lower_bound,
    sieve_constant,
    sigma_exact,
    toeplitz_kernel,
)

__version__ = "0.1.0"
