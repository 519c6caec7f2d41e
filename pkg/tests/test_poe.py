"""Chained-chart splines: knot matching, continuity, reductions."""

import numpy as np
import pytest

from conftest import GROUPS, PolyMotion, rand_quartic
from liespline.errors import MissingVelocities, OutOfDomain
from liespline.liealg import SE3, SO3
from liespline.poe import (KnotData, build_poe_c1_order3_vel,
                           build_poe_c2_order3, build_poe_c2_order4_vel,
                           build_poe_c3_order4)
from liespline.twopoint import (TwoPointProblem, boundary_value_interp,
                                initial_value_interp, xi_jet_to_v_jet)

JET_BUILDERS = [(build_poe_c2_order3, 3, 2), (build_poe_c3_order4, 4, 3)]
VEL_BUILDERS = [(build_poe_c1_order3_vel, 3, 1),
                (build_poe_c2_order4_vel, 4, 2)]

TIMES = np.array([0.0, 0.13, 0.38, 0.52, 0.81, 1.0])


def _jet_data(group, rng, motion=None):
    motion = motion or rand_quartic(group, rng)
    vjet = motion.v_jet(TIMES[0], 2)
    return motion, KnotData(group, TIMES,
                            [motion.pose(t) for t in TIMES],
                            v0=vjet[0], v0dot=vjet[1], v0ddot=vjet[2])


def _vel_data(group, rng, motion=None):
    motion = motion or rand_quartic(group, rng)
    vjet = motion.v_jet(TIMES[0], 1)
    return motion, KnotData(group, TIMES,
                            [motion.pose(t) for t in TIMES],
                            velocities=[motion.velocity(t) for t in TIMES],
                            v0dot=vjet[1])


def _knot_mismatch(spline, data):
    return max(np.abs(spline.eval(t)[0] - data.poses[j]).max()
               for j, t in enumerate(data.times))


def _continuity_gap(spline, depth):
    gap = 0.0
    for t in spline.times[1:-1]:
        pose_l, jet_l = spline.body_jet(t, s=depth, left=True)
        pose_r, jet_r = spline.body_jet(t, s=depth, left=False)
        gap = max(gap, np.abs(pose_l - pose_r).max())
        for m in range(depth):
            gap = max(gap, np.abs(jet_l[m] - jet_r[m]).max())
    return gap


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: g.tag)
@pytest.mark.parametrize("builder,order,depth", JET_BUILDERS,
                         ids=["order3", "order4"])
def test_jet_fed_matching_and_continuity(group, builder, order, depth, rng):
    motion, data = _jet_data(group, rng)
    spline = builder(data)
    assert _knot_mismatch(spline, data) < 1e-10
    assert _continuity_gap(spline, depth) < 1e-8
    # start jet reproduces the seeds
    _, vjet = spline.body_jet(TIMES[0], s=order - 1)
    for got, want in zip(vjet, motion.v_jet(TIMES[0], order - 2)):
        assert np.abs(got - want).max() < 1e-9


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: g.tag)
@pytest.mark.parametrize("builder,order,depth", VEL_BUILDERS,
                         ids=["order3", "order4"])
def test_velocity_fed_matching_and_continuity(group, builder, order, depth,
                                              rng):
    motion, data = _vel_data(group, rng)
    spline = builder(data)
    assert _knot_mismatch(spline, data) < 1e-10
    assert _continuity_gap(spline, depth) < 1e-8
    for j, t in enumerate(data.times):
        left = t == data.times[-1]
        _, vjet = spline.body_jet(t, s=1, left=left)
        assert np.abs(vjet[0] - data.velocities[j]).max() < 1e-10


def test_single_segment_reduces_to_two_point(rng):
    group = SE3
    motion = rand_quartic(group, rng)
    times = np.array([0.0, 1.0])
    poses = [motion.pose(t) for t in times]
    vjet = motion.v_jet(0.0, 2)

    data = KnotData(group, times, poses, v0=vjet[0], v0dot=vjet[1],
                    v0ddot=vjet[2])
    spline = build_poe_c3_order4(data)
    p = TwoPointProblem(group, poses[0], poses[1], jet0=vjet[:3], order=4)
    poly = initial_value_interp(p)
    for tau in np.linspace(0.0, 1.0, 17):
        want = group.compose(poses[0], group.exp(poly.value(tau)))
        assert np.abs(spline.eval(tau)[0] - want).max() < 1e-14

    vels = [motion.velocity(t) for t in times]
    data = KnotData(group, times, poses, velocities=vels)
    spline = build_poe_c1_order3_vel(data)
    p = TwoPointProblem(group, poses[0], poses[1], jet0=[vels[0]],
                        v1=vels[1], order=3)
    poly = boundary_value_interp(p)
    for tau in np.linspace(0.0, 1.0, 17):
        want = group.compose(poses[0], group.exp(poly.value(tau)))
        assert np.abs(spline.eval(tau)[0] - want).max() < 1e-14


@pytest.mark.parametrize("builder,order,tol",
                         [(build_poe_c2_order3, 3, 1e-11),
                          (build_poe_c3_order4, 4, 1e-7)])
def test_jet_fed_reconstructs_subgroup_motion(builder, order, tol, rng):
    # all knots on one subgroup arc: every segment chart shares the axis,
    # so the order-k builder reproduces exp(p(t) dir) for deg p = k.  The
    # seeds travel open loop, so roundoff grows by a factor per segment
    # (about 2 at order 3, 8 at order 4), hence the looser order-4 bound.
    dir_ = np.array([0.5, 1.5, 1.0])
    pcoef = [3.0, -1.0, 1.0] if order == 3 else [3.0, -1.0, 1.0, 0.4]
    motion = PolyMotion(SO3, [c * dir_ for c in pcoef])
    times = np.linspace(0.0, 1.0, 11)
    vjet = motion.v_jet(0.0, 2)
    data = KnotData(SO3, times, [motion.pose(t) for t in times],
                    v0=vjet[0], v0dot=vjet[1], v0ddot=vjet[2])
    spline = builder(data)
    err = max(np.linalg.norm(SO3.log_near(
        SO3.compose(SO3.inverse(motion.pose(t)), spline.eval(t)[0]),
        np.zeros(3))) for t in np.linspace(0.0, 1.0, 101))
    assert err < tol


def test_domain_and_data_guards(rng):
    motion, data = _vel_data(SE3, rng)
    spline = build_poe_c1_order3_vel(data)
    with pytest.raises(OutOfDomain):
        spline.eval(1.5)
    with pytest.raises(OutOfDomain):
        spline.eval(-0.1)
    bare = KnotData(SE3, TIMES, [motion.pose(t) for t in TIMES])
    with pytest.raises(MissingVelocities):
        build_poe_c1_order3_vel(bare)
    with pytest.raises(MissingVelocities):
        build_poe_c2_order3(bare)
    _, jet_data = _jet_data(SE3, rng, motion)
    jet_data.v0ddot = None
    with pytest.raises(MissingVelocities):
        build_poe_c3_order4(jet_data)


def test_eval_sides_agree_to_class(rng):
    _, data = _vel_data(SE3, rng)
    spline = build_poe_c2_order4_vel(data)
    t = float(data.times[2])
    pose_l, v_l, _ = spline.eval(t, left=True)
    pose_r, v_r, _ = spline.eval(t, left=False)
    assert np.abs(pose_l - pose_r).max() < 1e-12
    assert np.abs(v_l - v_r).max() < 1e-10
