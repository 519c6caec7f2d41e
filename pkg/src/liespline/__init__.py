"""Splines on SO(3), SE(3) and SO(3)xR3 built from velocity-matched
exponential coordinates, with reference integrators for validation."""

from .errors import (
    AngleNearPi,
    LieSplineError,
    MissingVelocities,
    NonmonotoneKnots,
    NotOrthonormal,
    OutOfDomain,
    ScenarioError,
    UnsupportedOrder,
)
from .liealg import SE3, SO3, SO3R3, LieGroup, group_from_tag, scalar_kernels
from .series import JetAtZero, a_coefficients, phi_recursion
from .twopoint import (
    TwoPointProblem,
    boundary_value_interp,
    boundary_value_interp_nonzero,
    initial_value_interp,
    initial_value_interp_nonzero,
    local_error_estimate,
    v_jet_to_xi_jet,
    xi_jet_to_v_jet,
)
from .poe import (
    KnotData,
    PoeSpline,
    build_poe_c1_order3_vel,
    build_poe_c2_order3,
    build_poe_c2_order4_vel,
    build_poe_c3_order4,
)
from .globalspline import (
    GlobalSpline,
    build_global_c1_order3_vel,
    build_global_c2_order3,
    build_global_c2_order4_vel,
    build_global_c3_order4,
)
from .bezier import ControlNet, decasteljau_curve, decasteljau_eval
from .rod import (
    RodModel,
    RodState,
    RodTrajectory,
    integrate_reference,
    pose_error,
    pose_error_from_poses,
    sample_equilibrium_strains,
    solve_tip_load,
    strain_jet,
    strain_ode_rhs,
)

__all__ = [
    "AngleNearPi",
    "LieSplineError",
    "MissingVelocities",
    "NonmonotoneKnots",
    "NotOrthonormal",
    "OutOfDomain",
    "ScenarioError",
    "UnsupportedOrder",
    "SE3",
    "SO3",
    "SO3R3",
    "LieGroup",
    "group_from_tag",
    "scalar_kernels",
    "JetAtZero",
    "a_coefficients",
    "phi_recursion",
    "TwoPointProblem",
    "boundary_value_interp",
    "boundary_value_interp_nonzero",
    "initial_value_interp",
    "initial_value_interp_nonzero",
    "local_error_estimate",
    "v_jet_to_xi_jet",
    "xi_jet_to_v_jet",
    "KnotData",
    "PoeSpline",
    "build_poe_c1_order3_vel",
    "build_poe_c2_order3",
    "build_poe_c2_order4_vel",
    "build_poe_c3_order4",
    "GlobalSpline",
    "build_global_c1_order3_vel",
    "build_global_c2_order3",
    "build_global_c2_order4_vel",
    "build_global_c3_order4",
    "ControlNet",
    "decasteljau_curve",
    "decasteljau_eval",
    "RodModel",
    "RodState",
    "RodTrajectory",
    "integrate_reference",
    "pose_error",
    "pose_error_from_poses",
    "sample_equilibrium_strains",
    "solve_tip_load",
    "strain_jet",
    "strain_ode_rhs",
]
