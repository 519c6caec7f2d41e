"""Rod equilibrium: stress transport, convergence, boundary data."""

import numpy as np
import pytest

from liespline.liealg import SE3
from liespline.rod import (REF_STRAIN, RodModel, integrate_reference,
                           pose_error, pose_error_from_poses,
                           sample_equilibrium_strains, solve_tip_load,
                           strain_jet, strain_ode_rhs)

# square 8 x 8 mm rubber rod of length 0.1 m used across the examples
SQUARE = RodModel.from_section(0.1, 0.008, 0.008, young=1.0e7, shear=3.0e5)
BASE_WRENCH = np.array([0.0, -0.0293, -0.1277, 0.0977, 0.0665, -0.195])
TIP_WRENCH = np.array([0.0, -0.008, -0.012, 0.0, 0.12, -0.08])


def _base_loaded_start(model, wrench):
    return model.ref_strain - wrench / model.stiffness


def test_section_stiffness_values():
    # length-normalized diag(G Jx, E Iyy, E Izz, E A, G A, G A)
    want = np.array([2.048e-3, 1024.0 / 30000.0, 1024.0 / 30000.0,
                     6400.0, 192.0, 192.0])
    assert np.allclose(SQUARE.stiffness, want, rtol=1e-12)
    flat = RodModel.from_section(0.1, 0.004, 0.012, young=1.0e7,
                                 shear=3.0e5)
    want = np.array([1.92e-3, 5.76e-2, 6.4e-3, 4800.0, 144.0, 144.0])
    assert np.allclose(flat.stiffness, want, rtol=1e-12)
    with pytest.raises(ValueError):
        RodModel(0.1, np.array([1.0, -1.0, 1.0, 1.0, 1.0, 1.0]))


def test_base_wrench_start_strain():
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    want = np.array([0.0, 0.0293 / (1024.0 / 30000.0),
                     0.1277 / (1024.0 / 30000.0),
                     1.0 - 0.0977 / 6400.0, -0.0665 / 192.0, 0.195 / 192.0])
    assert np.allclose(v0, want, rtol=1e-12)
    assert np.allclose(v0[1:3], [0.858398, 3.741211], atol=5e-7)


def test_strain_ode_rhs_formula(rng):
    k = SQUARE.stiffness
    v = REF_STRAIN + 0.01 * rng.standard_normal(6)
    want = (SE3.ad_matrix(v).T @ (k * (v - REF_STRAIN))) / k
    assert np.allclose(strain_ode_rhs(SQUARE, v, 0.3), want, atol=1e-15)
    loaded = RodModel(SQUARE.length, SQUARE.stiffness_si,
                      load=lambda tau: np.full(6, 0.1 * tau))
    got = strain_ode_rhs(loaded, v, 0.5)
    assert np.allclose(got, want + np.full(6, 0.05) / k, atol=1e-15)


def test_unloaded_rod_stays_straight():
    traj = integrate_reference(SQUARE, REF_STRAIN.copy(), steps=50)
    assert all(np.allclose(v, REF_STRAIN, atol=1e-14) for v in traj.strains)
    end = traj.poses[-1]
    assert np.allclose(end[:3, :3], np.eye(3), atol=1e-13)
    assert np.allclose(end[:3, 3], [1.0, 0.0, 0.0], atol=1e-13)


def test_stress_transport_along_equilibrium():
    # the internal stress seen from the base frame is conserved:
    # K(v(tau) - v0_ref) pulled back by Ad^T matches the base value
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    traj = integrate_reference(SQUARE, v0, steps=2000)
    k = SQUARE.stiffness
    lam0 = k * (v0 - REF_STRAIN)
    worst = 0.0
    for j in np.linspace(0, 2000, 20, dtype=int):
        lam = k * (traj.strains[j] - REF_STRAIN)
        back = SE3.Ad_matrix(SE3.inverse(traj.poses[j])).T @ lam
        worst = max(worst, np.abs(back - lam0).max())
    assert worst < 1e-6


def test_sampled_strains_match_trajectory():
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    traj = integrate_reference(SQUARE, v0, steps=2000)
    idx = [0, 400, 800, 1200, 1600, 2000]
    poses = [traj.poses[j] for j in idx]
    vels = sample_equilibrium_strains(SQUARE, v0, poses)
    for j, v in zip(idx, vels):
        assert np.abs(v - traj.strains[j]).max() < 1e-9


def test_richardson_step_halving_is_fourth_order():
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    ends = [integrate_reference(SQUARE, v0, steps=n).poses[-1]
            for n in (25, 50, 100, 200, 400)]
    dists = [np.linalg.norm(SE3.log(SE3.compose(SE3.inverse(a), b)))
             for a, b in zip(ends, ends[1:])]
    for a, b in zip(dists, dists[1:]):
        assert 0.8 * 16.0 < a / b < 1.2 * 16.0


def test_truncated_and_closed_reconstruction_agree():
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    a = integrate_reference(SQUARE, v0, steps=200,
                            truncated_dexpinv=True).poses[-1]
    b = integrate_reference(SQUARE, v0, steps=200,
                            truncated_dexpinv=False).poses[-1]
    assert np.abs(a - b).max() < 1e-12


def test_tip_load_solution_balances_at_the_tip():
    v0 = solve_tip_load(SQUARE, TIP_WRENCH, steps=2000)
    traj = integrate_reference(SQUARE, v0, steps=2000)
    want_end = REF_STRAIN - TIP_WRENCH / SQUARE.stiffness
    assert np.abs(traj.strains[-1] - want_end).max() < 1e-10


def test_strain_jet_matches_finite_differences():
    v0 = _base_loaded_start(SQUARE, BASE_WRENCH)
    traj = integrate_reference(SQUARE, v0, steps=2000)
    j = 700
    v, vd, vdd = strain_jet(SQUARE, traj.strains[j], traj.taus[j], 2)
    h = 1.0 / 2000.0
    fd1 = (traj.strains[j + 1] - traj.strains[j - 1]) / (2.0 * h)
    fd2 = (traj.strains[j + 1] - 2.0 * traj.strains[j]
           + traj.strains[j - 1]) / h ** 2
    assert np.abs(vd - fd1).max() < 1e-5 * max(1.0, np.abs(fd1).max())
    assert np.abs(vdd - fd2).max() < 1e-3 * max(1.0, np.abs(fd2).max())
    loaded = RodModel(SQUARE.length, SQUARE.stiffness_si,
                      load=lambda tau: np.zeros(6))
    with pytest.raises(ValueError):
        strain_jet(loaded, v, 0.5, 2)
    with pytest.raises(ValueError):
        strain_jet(SQUARE, v, 0.5, 3)


def test_flat_rod_terminal_wrench_reproduces_reported_values():
    # the base wrench transported to the tip: both printed terminal
    # triples are matched once their force and moment labels are read
    # as swapped (see the decisions ledger)
    flat = RodModel.from_section(0.1, 0.004, 0.012, young=1.0e7,
                                 shear=3.0e5)
    w0 = np.array([0.0, 0.002, 0.002, 0.0, -0.03, 0.01])
    v0 = _base_loaded_start(flat, w0)
    traj = integrate_reference(flat, v0, steps=2000)
    w1 = SE3.Ad_matrix(traj.poses[-1]).T @ w0
    assert np.allclose(w1[:3], [-0.0021, 0.0192, -0.0181], atol=1e-4)
    assert np.allclose(w1[3:], [0.0296, 0.0082, 0.0075], atol=1e-4)


def test_trajectory_indexing():
    traj = integrate_reference(SQUARE, REF_STRAIN.copy(), steps=10)
    assert traj.index_of(0.5) == 5
    assert traj.index_of(1.0) == 10
    with pytest.raises(ValueError):
        traj.index_of(0.123)
    st = traj.state(3)
    assert np.array_equal(st.pose, traj.poses[3])
    assert np.array_equal(st.strain, traj.strains[3])


def test_pose_error_split(rng):
    xi = np.array([0.3, -0.2, 0.1, 1.0, 2.0, -0.5])
    d = np.array([1e-3, 0.0, 0.0, 0.0, 2e-3, 0.0])
    eps_r, eps_p = pose_error(SE3, xi, SE3.log(
        SE3.compose(SE3.exp(xi), SE3.exp(d))))
    assert eps_r == pytest.approx(1e-3, rel=1e-2)
    assert eps_p == pytest.approx(2e-3, rel=1e-2)
    g_ref = SE3.exp(xi)
    g_cand = SE3.compose(g_ref, SE3.exp(d))
    er2, ep2 = pose_error_from_poses(SE3, g_ref, g_cand)
    assert er2 == pytest.approx(eps_r, rel=1e-9)
    assert ep2 == pytest.approx(eps_p, rel=1e-9)
