"""Static Cosserat rod equilibria as reference curves on SE(3).

A slender rod clamped at one end is described by its cross-section pose
g(tau) on SE(3) over normalized arc length tau in [0, 1] and the
body-fixed strain v = (g^-1 g')^vee.  With a linear constitutive law
Lambda = K(v - v0_ref) the static balance reduces to an ODE for the
strain alone,

    v' = K^-1 ad_v^T K (v - v0_ref) + K^-1 W(tau),

which together with the Poisson equation g' = g v^hat is integrated by
a Munthe-Kaas RK4 scheme.  All quantities are normalized: lengths are
measured in units of the rod length L, so the SI stiffness diagonal is
divided by L once on construction and end wrenches are given in
normalized units as well.

The module provides the pieces needed to manufacture reference shapes
and boundary data for the interpolation routines: the strain ODE, the
reference integrator (returning poses, strains and an unwrapped
coordinate curve xi(tau)), closed-form equilibrium strain transport to
pose samples, tip-load boundary solving, and the split rotation and
position error measure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np

from .liealg import SE3

REF_STRAIN = np.array([0.0, 0.0, 0.0, 1.0, 0.0, 0.0])


@dataclass
class RodModel:
    """Uniform rod with diagonal stiffness, in normalized arc length.

    ``stiffness_si`` is the SI diagonal (GJ_x, EI_yy, EI_zz, EA, GA, GA)
    per unit arc length; ``stiffness`` is the normalized diagonal used
    in every computation.  ``load`` is an optional distributed wrench
    field W(tau) in normalized units (end wrenches are not part of the
    model; they enter through boundary strains).
    """

    length: float
    stiffness_si: np.ndarray
    ref_strain: np.ndarray = field(default_factory=lambda: REF_STRAIN.copy())
    load: Optional[Callable[[float], np.ndarray]] = None

    def __post_init__(self):
        self.stiffness_si = np.asarray(self.stiffness_si, dtype=float)
        self.ref_strain = np.asarray(self.ref_strain, dtype=float)
        if self.stiffness_si.shape != (6,) or np.any(self.stiffness_si <= 0):
            raise ValueError("stiffness must be 6 positive diagonal entries")
        if self.length <= 0:
            raise ValueError("length must be positive")

    @property
    def stiffness(self) -> np.ndarray:
        return self.stiffness_si / self.length

    @classmethod
    def from_section(cls, length: float, dim_y: float, dim_z: float,
                     young: float, shear: float, **kw) -> "RodModel":
        """Rectangular cross section with extents dim_y, dim_z (m).

        Second moments follow the principal-axis convention
        I_yy = integral z^2 dA, I_zz = integral y^2 dA; the torsion
        constant is taken as the polar moment J_x = I_yy + I_zz.
        """
        area = dim_y * dim_z
        i_yy = dim_y * dim_z ** 3 / 12.0
        i_zz = dim_y ** 3 * dim_z / 12.0
        j_x = i_yy + i_zz
        diag = np.array([shear * j_x, young * i_yy, young * i_zz,
                         young * area, shear * area, shear * area])
        return cls(length=length, stiffness_si=diag, **kw)


@dataclass
class RodState:
    """Pose and strain of one cross section."""

    pose: np.ndarray
    strain: np.ndarray


@dataclass
class RodTrajectory:
    """Reference solution sampled on a uniform tau grid.

    ``xis[j]`` is the chart coordinate log(g(0)^-1 g(tau_j)) unwrapped
    for continuity, so it stays smooth past rotation angle pi.
    """

    taus: np.ndarray
    poses: List[np.ndarray]
    strains: np.ndarray
    xis: np.ndarray

    def state(self, j: int) -> RodState:
        return RodState(self.poses[j], self.strains[j])

    def index_of(self, tau: float) -> int:
        """Grid index of tau; raises if tau is not a grid point."""
        step = self.taus[1] - self.taus[0]
        j = int(round(tau / step))
        if not (0 <= j < len(self.taus)) or abs(self.taus[j] - tau) > 1e-12:
            raise ValueError(f"tau={tau} is not on the sample grid")
        return j


def strain_ode_rhs(model: RodModel, v: np.ndarray, tau: float) -> np.ndarray:
    """Right-hand side of the equilibrium strain ODE at tau."""
    k = model.stiffness
    rhs = (SE3.ad_matrix(v).T @ (k * (v - model.ref_strain))) / k
    if model.load is not None:
        rhs = rhs + model.load(tau) / k
    return rhs


def strain_jet(model: RodModel, v: np.ndarray, tau: float,
               s: int = 2) -> List[np.ndarray]:
    """Strain derivatives [v, v', ..., v^(s)] along the equilibrium.

    The second derivative differentiates the ODE once more along its own
    flow; with a distributed load this would need the load rate, so s = 2
    is limited to end-loaded rods.
    """
    v = np.asarray(v, dtype=float)
    out = [v]
    if s >= 1:
        out.append(strain_ode_rhs(model, v, tau))
    if s >= 2:
        if model.load is not None:
            raise ValueError("second strain derivative needs a load-free rod")
        k = model.stiffness
        lam = k * (v - model.ref_strain)
        vd = out[1]
        out.append((SE3.ad_matrix(vd).T @ lam
                    + SE3.ad_matrix(v).T @ (k * vd)) / k)
    if s >= 3:
        raise ValueError("strain_jet supports s <= 2")
    return out


def _dexpinv_apply(u: np.ndarray, v: np.ndarray, truncated: bool) -> np.ndarray:
    # Local reconstruction ODE: g = g_j exp(u) with g' = g v^hat gives
    # u' = dexpinv(-u) v.  The series through ad^2 keeps RK4 order.
    if truncated:
        c = SE3.bracket(u, v)
        return v + 0.5 * c + SE3.bracket(u, c) / 12.0
    return SE3.dexp_inv(-u) @ v


def integrate_reference(model: RodModel, v_init: np.ndarray,
                        steps: int = 2000,
                        truncated_dexpinv: bool = True) -> RodTrajectory:
    """Integrate pose and strain over tau in [0, 1] with MK-RK4.

    Each step solves the local algebra ODE with four RK stages and
    reconstructs the pose through exp, so the pose never leaves the
    group.  Returns steps + 1 samples including both ends.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    h = 1.0 / steps
    g = SE3.identity()
    v = np.asarray(v_init, dtype=float).copy()
    poses = [g]
    strains = [v.copy()]
    xis = [np.zeros(6)]
    for j in range(steps):
        tau = j * h

        def stage(u, w, dt):
            return (_dexpinv_apply(u, w, truncated_dexpinv),
                    strain_ode_rhs(model, w, tau + dt))

        zero = np.zeros(6)
        ku1, kv1 = stage(zero, v, 0.0)
        ku2, kv2 = stage(0.5 * h * ku1, v + 0.5 * h * kv1, 0.5 * h)
        ku3, kv3 = stage(0.5 * h * ku2, v + 0.5 * h * kv2, 0.5 * h)
        ku4, kv4 = stage(h * ku3, v + h * kv3, h)
        u_end = (h / 6.0) * (ku1 + 2.0 * ku2 + 2.0 * ku3 + ku4)
        v = v + (h / 6.0) * (kv1 + 2.0 * kv2 + 2.0 * kv3 + kv4)
        g = SE3.compose(g, SE3.exp(u_end))
        poses.append(g)
        strains.append(v.copy())
        xis.append(SE3.log_near(g, xis[-1]))
    return RodTrajectory(taus=np.linspace(0.0, 1.0, steps + 1),
                         poses=poses,
                         strains=np.array(strains),
                         xis=np.array(xis))


def solve_tip_load(model: RodModel, tip_wrench: np.ndarray,
                   steps: int = 2000) -> np.ndarray:
    """Base strain v(0) for a rod loaded by an end wrench at tau = 1.

    The end condition v(1) = v0_ref - K^-1 W(1) fixes the strain at the
    tip; the strain ODE is self-contained, so integrating it backwards
    (plain RK4, no pose needed) yields the base strain directly.
    """
    tip_wrench = np.asarray(tip_wrench, dtype=float)
    v = model.ref_strain - tip_wrench / model.stiffness
    h = 1.0 / steps
    for j in range(steps):
        tau = 1.0 - j * h

        def f(w, dt):
            return -strain_ode_rhs(model, w, tau - dt)

        k1 = f(v, 0.0)
        k2 = f(v + 0.5 * h * k1, 0.5 * h)
        k3 = f(v + 0.5 * h * k2, 0.5 * h)
        k4 = f(v + h * k3, h)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return v


def sample_equilibrium_strains(model: RodModel, v0: np.ndarray,
                               knot_poses: Sequence[np.ndarray]
                               ) -> List[np.ndarray]:
    """Strain at given poses by closed-form equilibrium transport.

    Without distributed loads the stress Lambda(tau) = Ad_h(tau)^T
    Lambda(0) for h = g(0)^-1 g(tau), so the strain at each knot follows
    from the base strain without integrating.
    """
    k = model.stiffness
    lam0 = k * (np.asarray(v0, dtype=float) - model.ref_strain)
    return [model.ref_strain + (SE3.Ad_matrix(h).T @ lam0) / k
            for h in knot_poses]


def pose_error(group, xi_ref: np.ndarray, xi_cand: np.ndarray):
    """Split deviation (eps_r, eps_p) between two chart coordinates.

    The relative coordinate log(exp(-xi_ref) exp(xi_cand)) is decomposed
    into its rotational and translational parts and their norms are
    reported separately; there is no bi-invariant metric mixing them.
    """
    rel = group.log(group.compose(group.inverse(group.exp(xi_ref)),
                                  group.exp(xi_cand)))
    if group.tag == "so3":
        return float(np.linalg.norm(rel)), 0.0
    return (float(np.linalg.norm(rel[:3])), float(np.linalg.norm(rel[3:])))


def pose_error_from_poses(group, g_ref: np.ndarray, g_cand: np.ndarray):
    """Split deviation (eps_r, eps_p) between two group elements."""
    rel = group.log(group.compose(group.inverse(g_ref), g_cand))
    if group.tag == "so3":
        return float(np.linalg.norm(rel)), 0.0
    return (float(np.linalg.norm(rel[:3])), float(np.linalg.norm(rel[3:])))
