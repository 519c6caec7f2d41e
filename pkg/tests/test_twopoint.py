"""Two-point interpolants: matching conditions and approximation order."""

import numpy as np
import pytest

from conftest import GROUPS, central_diff, rand_alg, rand_pose, rand_quartic
from liespline.liealg import SE3, SO3
from liespline.twopoint import (TwoPointProblem, boundary_value_interp,
                                boundary_value_interp_nonzero,
                                initial_value_interp,
                                initial_value_interp_nonzero,
                                local_error_estimate, v_jet_to_xi_jet,
                                xi_jet_to_v_jet)


def _random_problem(group, rng, order, bv):
    g0 = rand_pose(group, rng, angle=1.0)
    g1 = group.compose(g0, group.exp(rand_alg(group, rng, angle=0.8,
                                              trans=0.5)))
    n_jet = order - 2 if bv else order - 1
    jet0 = [0.5 * rng.standard_normal(group.alg_dim) for _ in range(n_jet)]
    v1 = 0.5 * rng.standard_normal(group.alg_dim) if bv else None
    return TwoPointProblem(group, g0, g1, jet0=jet0, v1=v1, order=order)


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: g.tag)
@pytest.mark.parametrize("order", [3, 4, 5])
def test_initial_value_matching(group, order, rng):
    for _ in range(5):
        p = _random_problem(group, rng, order, bv=False)
        poly = initial_value_interp(p)
        assert poly.degree == order
        # starts at the origin of the segment chart, ends on g1
        assert np.abs(poly.value(0.0)).max() == 0.0
        end = group.compose(p.g0, group.exp(poly.value(1.0)))
        assert np.abs(end - p.g1).max() < 1e-14
        # the body jet at tau = 0 reproduces the data
        vjet = xi_jet_to_v_jet(group, poly.value(0.0),
                               poly.jet(0.0, len(p.jet0))[1:])
        for got, want in zip(vjet, p.jet0):
            assert np.abs(got - want).max() < 1e-12


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: g.tag)
@pytest.mark.parametrize("order", [3, 4, 5])
def test_boundary_value_matching(group, order, rng):
    for _ in range(5):
        p = _random_problem(group, rng, order, bv=True)
        poly = boundary_value_interp(p)
        end = group.compose(p.g0, group.exp(poly.value(1.0)))
        assert np.abs(end - p.g1).max() < 1e-13
        xi1, xid1 = poly.jet(1.0, 1)
        v_end = xi_jet_to_v_jet(group, xi1, [xid1])[0]
        assert np.abs(v_end - p.v1).max() < 1e-12
        if order > 3:
            vjet = xi_jet_to_v_jet(group, poly.value(0.0),
                                   poly.jet(0.0, len(p.jet0))[1:])
            for got, want in zip(vjet, p.jet0):
                assert np.abs(got - want).max() < 1e-12


def test_nonzero_start_coordinate(rng):
    group = SE3
    p = _random_problem(group, rng, 4, bv=True)
    xi0 = 0.3 * rng.standard_normal(6)
    carrier = group.compose(p.g0, group.exp(-xi0))
    shifted = TwoPointProblem(group, p.g0, p.g1, jet0=p.jet0, v1=p.v1,
                              xi0=xi0, order=4)
    poly = boundary_value_interp_nonzero(shifted)
    assert np.abs(poly.value(0.0) - xi0).max() < 1e-14
    start = group.compose(carrier, group.exp(poly.value(0.0)))
    end = group.compose(carrier, group.exp(poly.value(1.0)))
    assert np.abs(start - p.g0).max() < 1e-13
    assert np.abs(end - p.g1).max() < 1e-13
    # body data is chart independent
    vjet = xi_jet_to_v_jet(group, poly.value(0.0), poly.jet(0.0, 2)[1:])
    assert np.abs(vjet[0] - p.jet0[0]).max() < 1e-12
    xi1, xid1 = poly.jet(1.0, 1)
    assert np.abs(xi_jet_to_v_jet(group, xi1, [xid1])[0]
                  - p.v1).max() < 1e-12
    with pytest.raises(ValueError):
        boundary_value_interp(shifted)
    with pytest.raises(ValueError):
        initial_value_interp(TwoPointProblem(group, p.g0, p.g1,
                                             jet0=[p.jet0[0]] * 3,
                                             xi0=xi0, order=4))


@pytest.mark.parametrize("group", GROUPS, ids=lambda g: g.tag)
def test_jet_conversion_roundtrip(group, rng):
    for _ in range(10):
        xi = rand_alg(group, rng, angle=1.5)
        xid = [rng.standard_normal(group.alg_dim) for _ in range(3)]
        v = xi_jet_to_v_jet(group, xi, xid)
        back = v_jet_to_xi_jet(group, xi, v)
        for got, want in zip(back, xid):
            assert np.abs(got - want).max() < 1e-11


def test_jet_conversion_against_finite_differences(rng):
    motion = rand_quartic(SE3, rng, scale=0.4)
    t = 0.37
    jet = motion.xi_jet(t, 3)
    v, vd, vdd = xi_jet_to_v_jet(SE3, jet[0], jet[1:])

    def v_of(s):
        j = motion.xi_jet(s, 1)
        return xi_jet_to_v_jet(SE3, j[0], j[1:])[0]

    assert np.abs(v - v_of(t)).max() == 0.0
    fd1 = central_diff(v_of, t)
    assert np.abs(vd - fd1).max() < 1e-8
    fd2 = central_diff(lambda s: central_diff(v_of, s), t, h=1e-4)
    assert np.abs(vdd - fd2).max() < 1e-5


class _VelocityMotion:
    """Motion defined by a polynomial body velocity; poses come from
    integrating the reconstruction equation, jets from the coefficients."""

    def __init__(self, group, rng, deg=4, scale=0.6):
        self.group = group
        self.vcoeffs = [scale * rng.standard_normal(group.alg_dim)
                        for _ in range(deg + 1)]

    def velocity(self, t):
        out = np.zeros(self.group.alg_dim)
        for c in self.vcoeffs[::-1]:
            out = out * t + c
        return out

    def v_jet0(self, s):
        fac = 1.0
        out = []
        for m in range(s + 1):
            out.append(fac * self.vcoeffs[m])
            fac *= m + 1
        return out

    def xi(self, t):
        from scipy.integrate import solve_ivp
        sol = solve_ivp(
            lambda s, x: self.group.dexp_inv(-x) @ self.velocity(s),
            (0.0, t), np.zeros(self.group.alg_dim),
            rtol=1e-12, atol=1e-14)
        return sol.y[:, -1]

    def pose(self, t):
        return self.group.exp(self.xi(t))


def _segment_data(motion, T, order, bv):
    group = motion.group
    n_jet = order - 2 if bv else order - 1
    vjet = motion.v_jet0(n_jet - 1)
    jet0 = [vjet[m] * T ** (m + 1) for m in range(n_jet)]
    v1 = T * motion.velocity(T) if bv else None
    return TwoPointProblem(group, motion.pose(0.0), motion.pose(T),
                           jet0=jet0, v1=v1, order=order)


@pytest.mark.parametrize("order", [3, 4, 5])
@pytest.mark.parametrize("bv", [False, True], ids=["iv", "bv"])
def test_midpoint_error_decays_one_past_order(order, bv, rng):
    # sampling a fixed smooth motion over [0, T]: the tau^k defect
    # coefficient is itself O(T), so the midpoint error goes like T^(k+1)
    motion = _VelocityMotion(SE3, rng)
    errs = []
    for T in (0.4, 0.2):
        p = _segment_data(motion, T, order, bv)
        poly = (boundary_value_interp(p) if bv else initial_value_interp(p))
        here = SE3.compose(p.g0, SE3.exp(poly.value(0.5)))
        want = motion.pose(0.5 * T)
        errs.append(np.abs(here - want).max())
    ratio = errs[0] / errs[1]
    want = 2.0 ** (order + 1)
    assert 0.5 * want < ratio < 2.0 * want


def test_local_error_estimate_definition_and_decay(rng):
    motion = rand_quartic(SE3, rng, scale=0.5)
    motion.coeffs.append(0.3 * rng.standard_normal(6))
    ests = []
    for T in (0.4, 0.2):
        vjet = motion.v_jet(0.0, 2)
        jet0 = [vjet[m] * T ** (m + 1) for m in range(3)]
        p = TwoPointProblem(SE3, motion.pose(0.0), motion.pose(T),
                            jet0=jet0, order=3)
        est = local_error_estimate(p)
        # the estimate is exactly the gap the interpolant closes with
        # its top coefficient: poly = series truncation + est * tau^k
        poly = initial_value_interp(p)
        series_top = poly.coeffs[3] - est
        phi3_over_6 = (vjet[2] * T ** 3
                       + 0.5 * SE3.bracket(vjet[0], vjet[1]) * T ** 3) / 6.0
        assert np.abs(series_top - phi3_over_6).max() < 1e-12
        ests.append(np.linalg.norm(est))
    assert 8.0 < ests[0] / ests[1] < 32.0  # one order past tau^3


def test_boundary_value_requires_v1(rng):
    p = _random_problem(SE3, rng, 3, bv=False)
    with pytest.raises(ValueError):
        boundary_value_interp(p)
    short = TwoPointProblem(SE3, p.g0, p.g1, jet0=[], order=4)
    with pytest.raises(ValueError):
        initial_value_interp(short)
    with pytest.raises(ValueError):
        initial_value_interp_nonzero(short)
