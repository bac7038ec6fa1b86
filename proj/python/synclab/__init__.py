"""Frustrated synchronization models: Kuramoto-Sakaguchi, Lohe sphere and Lohe matrix."""

from ._core import (
    Flavor,
    PhaseConfig,
    SphereConfig,
    SynclabError,
    UnitaryConfig,
    convergence_order,
    cross_ratio_K,
    cyclic_rep,
    dichotomy_check,
    embed_unitary2_to_sphere,
    functional_I,
    functional_J_alpha,
    integrate,
    is_equilibrium,
    kuramoto_reduction_error,
    kuramoto_rhs,
    lohe_matrix_rhs,
    matrix_cross_ratio_spectrum,
    matrix_diameter,
    order_parameter_R,
    ptolemy_residual,
    reduce_matrix_to_sphere_check,
    representation_json,
    run_scenario,
    run_suite,
    skew_frustration_product,
    sphere_cross_ratio_H,
    sphere_diameter,
    sphere_max_distance,
    sphere_order_parameter,
    sphere_reduction_discrepancy,
    sphere_rhs,
    sphere_stereo_invert,
    sphere_stereo_project,
    stereo_project_phase,
    suite_criteria,
    suite_names,
    symmetric_standard_rep,
    validate,
)

__version__ = "0.1.0"
