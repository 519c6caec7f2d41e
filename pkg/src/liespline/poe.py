"""Piecewise product-of-exponentials splines.

Each segment carries its own exponential chart at the previous knot
pose: h(t) = h_{i-1} exp(xi_i(tau)) with tau = (t - t_{i-1})/T_i, so the
coordinate polynomial of every segment starts at zero and ends at
xibar_i = log(h_{i-1}^-1 h_i).

Two families of builders:

* jet-fed (orders 3 and 4): only the start jet is prescribed; the
  end-of-segment coordinate jet is pushed through the chart map to a
  body-velocity jet at the knot, rescaled by powers of
  delta_i = T_i/T_{i-1}, and fed to the next segment.  Continuity class
  is C^{k-1}.
* velocity-fed (orders 3 and 4): body velocities are prescribed at every
  knot, so each segment is a boundary-value interpolant; order 4
  additionally propagates the acceleration entry.  Continuity drops by
  one class in exchange for hitting the prescribed twists.

The first segment treats the incoming jet as living on a unit-duration
virtual segment (T_0 = 1), which makes the delta-rescaling uniform and
keeps prescribed data in physical time units throughout.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .errors import (AngleNearPi, MissingVelocities, NonmonotoneKnots,
                     OutOfDomain)
from .liealg import LieGroup
from .poly import CoordinatePolynomial
from .twopoint import (TwoPointProblem, boundary_value_interp,
                       initial_value_interp, xi_jet_to_v_jet)


@dataclass
class KnotData:
    """Interpolation data: knot times, poses, optional velocity data.

    ``velocities`` lists the body-fixed knot velocity at every knot and
    is consumed by the velocity-fed builders.  The jet-fed builders read
    the seeds ``v0`` (falling back to ``velocities[0]`` when present),
    ``v0dot`` and, at order 4, ``v0ddot``; all seeds are physical-time
    derivatives of the body velocity at t_0.
    """

    group: LieGroup
    times: np.ndarray
    poses: List[np.ndarray]
    velocities: Optional[List[np.ndarray]] = None
    v0: Optional[np.ndarray] = None
    v0dot: Optional[np.ndarray] = None
    v0ddot: Optional[np.ndarray] = None

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        if self.times.ndim != 1 or self.times.size < 2:
            raise NonmonotoneKnots("need at least two knot times")
        if np.any(np.diff(self.times) <= 0):
            raise NonmonotoneKnots("knot times must be strictly increasing")
        self.poses = [np.asarray(h, dtype=float) for h in self.poses]
        if len(self.poses) != self.times.size:
            raise NonmonotoneKnots(
                f"{len(self.poses)} poses for {self.times.size} knot times")
        if self.velocities is not None:
            self.velocities = [np.asarray(v, dtype=float)
                               for v in self.velocities]
            if len(self.velocities) != self.times.size:
                raise MissingVelocities(
                    f"{len(self.velocities)} velocities for "
                    f"{self.times.size} knots")
        for name in ("v0", "v0dot", "v0ddot"):
            val = getattr(self, name)
            if val is not None:
                setattr(self, name, np.asarray(val, dtype=float))

    @property
    def nseg(self) -> int:
        return self.times.size - 1

    def duration(self, i: int) -> float:
        # segment index is 1-based, matching the knot it ends at
        return float(self.times[i] - self.times[i - 1])

    def seed(self, name: str) -> np.ndarray:
        val = getattr(self, name)
        if val is None and name == "v0" and self.velocities is not None:
            val = self.velocities[0]
        if val is None:
            raise MissingVelocities(f"builder requires {name}")
        return val


@dataclass
class SplineSegment:
    """One chart of a built spline.

    ``poly`` is the coordinate polynomial in the segment's normalized
    time; ``base`` is the pose the chart exponentiates from (previous
    knot pose for piecewise splines, the shared base pose for global
    ones).  ``coeffs`` keeps the named algorithm quantities, both as
    produced at the previous knot (``*_raw``, in that segment's time
    normalization) and after delta-rescaling, for inspection.
    """

    index: int
    t_start: float
    duration: float
    base: np.ndarray
    poly: CoordinatePolynomial
    coeffs: Dict[str, np.ndarray] = field(default_factory=dict)


class _SplineBase:
    """Shared evaluation over an ordered list of chart segments."""

    def __init__(self, group: LieGroup, times: np.ndarray,
                 segments: List[SplineSegment], order: int, continuity: int):
        self.group = group
        self.times = times
        self.segments = segments
        self.order = order
        self.continuity = continuity

    @property
    def domain(self):
        return float(self.times[0]), float(self.times[-1])

    def _locate(self, t: float, left: bool) -> SplineSegment:
        lo, hi = self.domain
        if t < lo or t > hi:
            raise OutOfDomain(f"t = {t} outside [{lo}, {hi}]")
        knots = self.times.tolist()
        if left:
            idx = bisect.bisect_left(knots, t) - 1
        else:
            idx = bisect.bisect_right(knots, t) - 1
        idx = min(max(idx, 0), len(self.segments) - 1)
        return self.segments[idx]

    def body_jet(self, t: float, s: int = 2, left: bool = False):
        """Pose and the first s physical-time derivatives of the body
        velocity-like jet (v, v', ...) at time t, s <= 3."""
        seg = self._locate(t, left)
        tau = (t - seg.t_start) / seg.duration
        xi = seg.poly.value(tau)
        pose = self.group.compose(seg.base, self.group.exp(xi))
        vel = xi_jet_to_v_jet(self.group, xi, seg.poly.jet(tau, s)[1:])
        return pose, [vel[m] / seg.duration ** (m + 1) for m in range(s)]

    def eval(self, t: float, left: bool = False):
        """Pose, body velocity and body acceleration at time t.

        At interior knots the right segment is used unless ``left``
        selects the left one-sided limit (they agree up to the spline's
        continuity class).
        """
        pose, vel = self.body_jet(t, s=2, left=left)
        return pose, vel[0], vel[1]


class PoeSpline(_SplineBase):
    """Piecewise spline with one exponential chart per segment."""


def _segment_problem(data: KnotData, i: int, jet0, v1=None, xi0=None,
                     order=3):
    return TwoPointProblem(data.group, data.poses[i - 1], data.poses[i],
                           jet0=jet0, v1=v1, xi0=xi0, order=order)


def _build_poe_jet(data: KnotData, order: int) -> PoeSpline:
    names = ("alpha", "beta", "gamma")[:order - 1]
    jet = [data.seed(n) for n in ("v0", "v0dot", "v0ddot")[:order - 1]]
    t_prev = 1.0
    segments = []
    for i in range(1, data.nseg + 1):
        t_i = data.duration(i)
        delta = t_i / t_prev
        scaled = [jet[m] * delta ** (m + 1) for m in range(order - 1)]
        prob = _segment_problem(data, i, scaled, order=order)
        try:
            poly = initial_value_interp(prob)
        except AngleNearPi as exc:
            raise AngleNearPi(f"segment {i}: {exc}") from None
        xibar = poly.value(1.0)
        end_xi_jet = poly.jet(1.0, s=order - 1)[1:]
        coeffs = {"xibar": xibar, "delta": delta}
        coeffs.update({n + "_raw": jet[m] for m, n in enumerate(names)})
        coeffs.update({n: scaled[m] for m, n in enumerate(names)})
        coeffs.update(dict(zip(("a", "b", "c"), end_xi_jet)))
        segments.append(SplineSegment(i, float(data.times[i - 1]), t_i,
                                      data.poses[i - 1], poly, coeffs))
        jet = xi_jet_to_v_jet(data.group, xibar, list(end_xi_jet))
        t_prev = t_i
    return PoeSpline(data.group, data.times, segments, order, order - 1)


def _build_poe_vel(data: KnotData, order: int) -> PoeSpline:
    if data.velocities is None:
        raise MissingVelocities("builder requires velocities at every knot")
    vel = data.velocities
    beta = data.seed("v0dot") if order == 4 else None
    t_prev = 1.0
    segments = []
    for i in range(1, data.nseg + 1):
        t_i = data.duration(i)
        delta = t_i / t_prev
        d = t_i * vel[i - 1]
        v1 = t_i * vel[i]
        jet0 = [d]
        coeffs = {"d": d, "delta": delta}
        if order == 4:
            coeffs["beta_raw"] = beta
            beta = beta * delta ** 2
            coeffs["beta"] = beta
            jet0.append(beta)
        prob = _segment_problem(data, i, jet0, v1=v1, order=order)
        try:
            poly = boundary_value_interp(prob)
        except AngleNearPi as exc:
            raise AngleNearPi(f"segment {i}: {exc}") from None
        xibar = poly.value(1.0)
        coeffs["xibar"] = xibar
        coeffs["a"] = poly.deriv1(1.0)
        if order == 4:
            coeffs["b"] = poly.deriv2(1.0)
            beta = xi_jet_to_v_jet(data.group, xibar,
                                   [coeffs["a"], coeffs["b"]])[1]
        segments.append(SplineSegment(i, float(data.times[i - 1]), t_i,
                                      data.poses[i - 1], poly, coeffs))
        t_prev = t_i
    return PoeSpline(data.group, data.times, segments, order,
                     order - 2)


def build_poe_c2_order3(data: KnotData) -> PoeSpline:
    """3rd-order spline from poses plus the start velocity and
    acceleration; C2 at the knots."""
    return _build_poe_jet(data, 3)


def build_poe_c3_order4(data: KnotData) -> PoeSpline:
    """4th-order spline from poses plus the start jet through the second
    velocity derivative; C3 at the knots."""
    return _build_poe_jet(data, 4)


def build_poe_c1_order3_vel(data: KnotData) -> PoeSpline:
    """3rd-order spline interpolating poses and velocities at every
    knot; C1 (accelerations may jump)."""
    return _build_poe_vel(data, 3)


def build_poe_c2_order4_vel(data: KnotData) -> PoeSpline:
    """4th-order spline interpolating poses and velocities at every knot
    plus the start acceleration; C2."""
    return _build_poe_vel(data, 4)
