"""Generalised Kahler structures on CP2 built from the Hitchin flow."""

from ._core import (
    C3_MAX,
    BoundaryError,
    ComposabilityError,
    ConvergenceError,
    DomainError,
    Error,
    InvalidCornerError,
    QuadratureError,
    StencilError,
    check,
    cp2_hessian,
    field,
    flow_map,
    gkp,
    groupoid_source_target,
    lattice,
    local_Q_coords,
    min_metric_eigenvalue,
    nijenhuis,
    ode_oracle,
    poisson_norm,
    polar_of_y,
    suite_names,
    varsigma,
    wp,
    wp_prime,
    y_of_polar,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
