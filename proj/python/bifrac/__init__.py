"""Bivariate fractal-index estimation: simulation, estimation, asymptotics."""

from bifrac._core import (
    AsymptoticLaw,
    CovarianceModel,
    DegeneratePathError,
    JointEstimate,
    LocalExpansion,
    MaternModel,
    MaternParams,
    NotPositiveDefinite,
    SamplePath,
    WeightVector,
    asymptotic_law,
    bessel_k,
    check_matern_validity,
    check_validity,
    component_graph_dimension,
    default_dilations,
    estimate_alpha,
    estimate_joint,
    gamma_fn,
    gls_weights,
    local_expansion,
    matern_b1,
    matern_correlation,
    ols_weights,
    phi0_matrix,
    psi_rate,
    sigma0_marginal,
    simulate_path,
    tau,
    trajectory_dimension,
    zbar,
)

__all__ = [name for name in dir() if not name.startswith("_")]
