"""Globally parameterized splines.

A single exponential chart anchored at one base pose serves the whole
curve: h(t) = hbar0 exp(xi(t)).  Knot coordinates xi_i = log(hbar0^-1
h_i) are computed once, and each segment's polynomial interpolates
between consecutive coordinates, so the spline is assembled additively
on the algebra and consecutive segments share knot values by
construction.  No chart switching happens anywhere along the curve; the
price is a reachability constraint: every knot must stay strictly inside
the principal branch of the shared chart, and the builders fail fast on
the first knot that does not.

The builder family mirrors the piecewise module: jet-fed variants
propagate the start jet across segments (orders 3 and 4, classes C2 and
C3), velocity-fed variants interpolate prescribed knot twists (orders 3
and 4, classes C1 and C2).  All boundary data is pulled into the shared
chart with the inverse jet maps before the polynomial is assembled,
which is where the derivative-of-dexp machinery at nonzero base points
does its work.
"""

from __future__ import annotations

import numpy as np

from .errors import AngleNearPi, MissingVelocities
from .poe import KnotData, SplineSegment, _SplineBase, _segment_problem
from .twopoint import (boundary_value_interp_nonzero,
                       initial_value_interp_nonzero, v_jet_to_xi_jet,
                       xi_jet_to_v_jet)


class GlobalSpline(_SplineBase):
    """Spline in one shared exponential chart."""

    def __init__(self, group, times, segments, order, continuity, base):
        super().__init__(group, times, segments, order, continuity)
        self.base = base


def _knot_coordinates(data: KnotData, base: np.ndarray):
    g = data.group
    base_inv = g.inverse(base)
    xis = []
    for i, h in enumerate(data.poses):
        try:
            xis.append(g.log(g.compose(base_inv, h)))
        except AngleNearPi as exc:
            raise AngleNearPi(
                f"knot {i} not reachable in the base chart: {exc}") from None
    return xis


def _build_global_jet(data: KnotData, base, order: int) -> GlobalSpline:
    base = data.poses[0] if base is None else np.asarray(base, dtype=float)
    xis = _knot_coordinates(data, base)
    names = ("alpha", "beta", "gamma")[:order - 1]
    jet = [data.seed(n) for n in ("v0", "v0dot", "v0ddot")[:order - 1]]
    t_prev = 1.0
    segments = []
    for i in range(1, data.nseg + 1):
        t_i = data.duration(i)
        delta = t_i / t_prev
        scaled = [jet[m] * delta ** (m + 1) for m in range(order - 1)]
        prob = _segment_problem(data, i, scaled, xi0=xis[i - 1], order=order)
        poly = initial_value_interp_nonzero(prob)
        end_xi_jet = poly.jet(1.0, s=order - 1)[1:]
        coeffs = {"xi_prev": xis[i - 1], "dxi": xis[i] - xis[i - 1],
                  "delta": delta}
        coeffs.update({n + "_raw": jet[m] for m, n in enumerate(names)})
        coeffs.update({n: scaled[m] for m, n in enumerate(names)})
        coeffs.update(dict(zip(
            ("d", "e", "f"), v_jet_to_xi_jet(data.group, xis[i - 1], scaled))))
        coeffs.update(dict(zip(("a", "b", "c"), end_xi_jet)))
        segments.append(SplineSegment(i, float(data.times[i - 1]), t_i,
                                      base, poly, coeffs))
        jet = xi_jet_to_v_jet(data.group, xis[i], list(end_xi_jet))
        t_prev = t_i
    return GlobalSpline(data.group, data.times, segments, order, order - 1,
                        base)


def _build_global_vel(data: KnotData, base, order: int) -> GlobalSpline:
    if data.velocities is None:
        raise MissingVelocities("builder requires velocities at every knot")
    base = data.poses[0] if base is None else np.asarray(base, dtype=float)
    xis = _knot_coordinates(data, base)
    vel = data.velocities
    beta = data.seed("v0dot") if order == 4 else None
    t_prev = 1.0
    segments = []
    for i in range(1, data.nseg + 1):
        t_i = data.duration(i)
        delta = t_i / t_prev
        jet0 = [t_i * vel[i - 1]]
        coeffs = {"xi_prev": xis[i - 1], "dxi": xis[i] - xis[i - 1],
                  "delta": delta}
        if order == 4:
            coeffs["beta_raw"] = beta
            beta = beta * delta ** 2
            coeffs["beta"] = beta
            jet0.append(beta)
        prob = _segment_problem(data, i, jet0, v1=t_i * vel[i],
                                xi0=xis[i - 1], order=order)
        poly = boundary_value_interp_nonzero(prob)
        coeffs.update(dict(zip(
            ("d", "e"), v_jet_to_xi_jet(data.group, xis[i - 1], jet0))))
        coeffs["a"] = poly.deriv1(1.0)
        if order == 4:
            coeffs["b"] = poly.deriv2(1.0)
            beta = xi_jet_to_v_jet(data.group, xis[i],
                                   [coeffs["a"], coeffs["b"]])[1]
        segments.append(SplineSegment(i, float(data.times[i - 1]), t_i,
                                      base, poly, coeffs))
        t_prev = t_i
    return GlobalSpline(data.group, data.times, segments, order, order - 2,
                        base)


def build_global_c2_order3(data: KnotData, base=None) -> GlobalSpline:
    """3rd-order global spline from poses plus the start velocity and
    acceleration; C2 at the knots.  ``base`` defaults to the first
    pose so that xi(t_0) = 0."""
    return _build_global_jet(data, base, 3)


def build_global_c3_order4(data: KnotData, base=None) -> GlobalSpline:
    """4th-order global spline from poses plus the start jet through the
    second velocity derivative; C3 at the knots."""
    return _build_global_jet(data, base, 4)


def build_global_c1_order3_vel(data: KnotData, base=None) -> GlobalSpline:
    """3rd-order global spline interpolating poses and velocities at
    every knot; C1."""
    return _build_global_vel(data, base, 3)


def build_global_c2_order4_vel(data: KnotData, base=None) -> GlobalSpline:
    """4th-order global spline interpolating poses and velocities at
    every knot plus the start acceleration; C2."""
    return _build_global_vel(data, base, 4)
