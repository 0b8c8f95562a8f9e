"""Uncertainty inequalities for band-limited functions given by their integer samples."""

from ._core import (
    AllStartsDegenerate,
    BoundViolation,
    CoeffVec,
    InadmissibleFunction,
    ParameterError,
    ZeroFunction,
    alternating_sum,
    check_backward_up,
    check_bernstein,
    check_breitenberger_sequence,
    check_central_up,
    check_heisenberg,
    check_localization,
    check_sine_circle,
    commutator_limit_check,
    convergence_rate,
    delta_sweep_csv,
    dense_grid_inner,
    evaluate,
    inner,
    is_admissible,
    minimize_ratio,
    norm,
    norm_sq,
    random_coeffs,
    shifted_inner,
    uncertainty_ratio,
    validate_kernels,
)

__version__ = "0.1.0"


def demo():
    """The two-sample function f(0) = f(1) = 1."""
    return CoeffVec(0, [1.0, 1.0])
