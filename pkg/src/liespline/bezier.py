"""De Casteljau construction of Bezier-type curves on Lie groups.

The classical corner-cutting recursion with straight lines replaced by
one-parameter subgroup arcs: at every level the two neighbors are
blended through h exp(tau log(h^-1 h')).  The result interpolates the
end control points only (interior ones shape the curve without lying on
it) and carries zero boundary velocities.  The intermediate points
depend on tau, so each evaluation rebuilds the whole triangle; there is
no closed polynomial form to precompute.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from .errors import AngleNearPi
from .liealg import LieGroup


@dataclass
class ControlNet:
    """Control points of a group-valued Bezier curve of order n."""

    group: LieGroup
    points: List[np.ndarray]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("need at least two control points")
        self.points = [np.asarray(h, dtype=float) for h in self.points]

    @property
    def order(self) -> int:
        return len(self.points) - 1


def decasteljau_eval(net: ControlNet, tau: float) -> np.ndarray:
    """Curve point at tau in [0, 1], by the subgroup-arc recursion."""
    g = net.group
    # Endpoints interpolate by construction; return them outright so the
    # property is exact instead of limited by the log/exp roundtrip.
    if tau == 0.0:
        return net.points[0].copy()
    if tau == 1.0:
        return net.points[-1].copy()
    level = list(net.points)
    depth = 0
    while len(level) > 1:
        depth += 1
        nxt = []
        for i in range(len(level) - 1):
            try:
                xi = g.log(g.compose(g.inverse(level[i]), level[i + 1]))
            except AngleNearPi as exc:
                raise AngleNearPi(
                    f"level {depth}, index {i}: {exc}") from None
            nxt.append(g.compose(level[i], g.exp(tau * xi)))
        level = nxt
    return level[0]


def decasteljau_curve(net: ControlNet, samples: int) -> List[np.ndarray]:
    """Uniform sampling of the curve over tau in [0, 1]."""
    if samples < 2:
        raise ValueError("need at least two samples")
    return [decasteljau_eval(net, tau)
            for tau in np.linspace(0.0, 1.0, samples)]
