"""Two-point interpolants in exponential coordinates.

All constructions live on the normalized parameter tau in [0, 1]; a
segment of physical duration T is handled by scaling the supplied
velocity jet (v -> T v, v' -> T^2 v', ...) before building and dividing
the evaluated derivatives by the matching powers of T afterwards.

Initial-value interpolants match the start jet and the end pose:

    xi(tau) = xi0 + tau^k (xibar - xi0)
              + sum_{j=1}^{k-1} (tau^j - tau^k)/j! Phi_j

with Phi_j the coordinate jet xi^(j)(0).  Boundary-value interpolants
trade the highest start derivative for the end velocity v1 and are the
two-point Hermite polynomials with end slope dexp^-1_{-xibar} v1.

With xi0 = 0 the coordinate jet comes from the velocity jet through the
series recursion; with xi0 != 0 it comes from the chain rule of
v = dexp_{-xi}(xi'), available here up to third derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import List, Optional

import numpy as np

from .errors import UnsupportedOrder
from .liealg import LieGroup
from .poly import CoordinatePolynomial
from .series import JetAtZero, phi_recursion

_ORDERS = (3, 4, 5)


@dataclass
class TwoPointProblem:
    """Segment data: poses at tau = 0, 1 plus a start jet.

    ``jet0`` holds body-velocity derivatives at tau = 0, already
    normalized to the unit interval.  Initial-value interpolants of
    order k consume k - 1 entries, boundary-value interpolants k - 2
    entries plus the normalized end velocity ``v1``.  ``xi0`` places the
    start at a nonzero coordinate relative to the carrier pose
    g0 exp(-xi0).
    """

    group: LieGroup
    g0: np.ndarray
    g1: np.ndarray
    jet0: List[np.ndarray] = field(default_factory=list)
    v1: Optional[np.ndarray] = None
    xi0: Optional[np.ndarray] = None
    order: int = 3

    def __post_init__(self):
        if self.order not in _ORDERS:
            raise UnsupportedOrder(f"order {self.order} not in {_ORDERS}")
        self.jet0 = [np.asarray(v, dtype=float) for v in self.jet0]
        if self.v1 is not None:
            self.v1 = np.asarray(self.v1, dtype=float)
        if self.xi0 is None:
            self.xi0 = np.zeros(self.group.alg_dim)
        else:
            self.xi0 = np.asarray(self.xi0, dtype=float)


# ---------------------------------------------------------------------------
# Jet conversion between coordinate derivatives and body velocities.
#
# With v(tau) = dexp_{-xi}(xi') the chain rule gives (D evaluated at the
# point -xi, directions are the plain coordinate derivatives):
#   v   = dexp_{-xi} xi'
#   v'  = dexp_{-xi} xi'' - (D_{-xi}dexp)(xi') xi'
#   v'' = dexp_{-xi} xi''' - 2 (D_{-xi}dexp)(xi') xi''
#         - (D_{-xi}dexp)(xi'') xi' + (D2_{-xi}dexp)(xi', xi') xi'
# and the inverse direction swaps dexp for dexp^-1 with v-arguments.

def xi_jet_to_v_jet(group: LieGroup, xi: np.ndarray, xi_derivs):
    """Body velocity derivatives [v, v', v''][:s] from coordinate ones."""
    s = len(xi_derivs)
    if not 1 <= s <= 3:
        raise ValueError("jet conversion supports one to three derivatives")
    m = -np.asarray(xi, dtype=float)
    d = [np.asarray(a, dtype=float) for a in xi_derivs]
    out = [group.dexp(m) @ d[0]]
    if s >= 2:
        out.append(group.dexp(m) @ d[1] - group.d_dexp(m, d[0]) @ d[0])
    if s >= 3:
        out.append(group.dexp(m) @ d[2]
                   - 2.0 * group.d_dexp(m, d[0]) @ d[1]
                   - group.d_dexp(m, d[1]) @ d[0]
                   + group.d2_dexp(m, d[0], d[0]) @ d[0])
    return out


def v_jet_to_xi_jet(group: LieGroup, xi: np.ndarray, v_derivs):
    """Coordinate derivatives [xi', xi'', xi'''][:s] from velocity ones."""
    s = len(v_derivs)
    if not 1 <= s <= 3:
        raise ValueError("jet conversion supports one to three derivatives")
    m = -np.asarray(xi, dtype=float)
    v = [np.asarray(a, dtype=float) for a in v_derivs]
    d1 = group.dexp_inv(m) @ v[0]
    out = [d1]
    if s >= 2:
        d2 = group.dexp_inv(m) @ v[1] - group.d_dexp_inv(m, d1) @ v[0]
        out.append(d2)
    if s >= 3:
        d3 = group.dexp_inv(m) @ v[2] \
            - 2.0 * group.d_dexp_inv(m, d1) @ v[1] \
            - group.d_dexp_inv(m, d2) @ v[0] \
            + group.d2_dexp_inv(m, d1, d1) @ v[0]
        out.append(d3)
    return out


def jet_pushforward(group: LieGroup, xi: np.ndarray, derivs, s: int = None,
                    inverse: bool = False):
    """Convert between coordinate and velocity jets at coordinate xi.

    Forward (default) maps coordinate derivatives [xi', ...] to body
    velocity derivatives [v, ...]; ``inverse=True`` maps the other way.
    ``s`` truncates the output length (at most 3 either way).
    """
    derivs = list(derivs)[: (s if s is not None else len(derivs))]
    if inverse:
        return v_jet_to_xi_jet(group, xi, derivs)
    return xi_jet_to_v_jet(group, xi, derivs)


def _coordinate_jet(p: TwoPointProblem, count: int):
    """First ``count`` coordinate derivatives at tau = 0."""
    if count == 0:
        return []
    if float(np.linalg.norm(p.xi0)) == 0.0:
        return phi_recursion(JetAtZero(p.group, p.jet0[:count]))
    if count > 3:
        raise UnsupportedOrder(
            "jets at nonzero start coordinates support at most three "
            "derivatives")
    return v_jet_to_xi_jet(p.group, p.xi0, p.jet0[:count])


def _terminal_coordinate(p: TwoPointProblem) -> np.ndarray:
    """xibar = log(carrier^-1 g1) with carrier = g0 exp(-xi0)."""
    G = p.group
    if float(np.linalg.norm(p.xi0)) == 0.0:
        carrier = p.g0
    else:
        carrier = G.compose(p.g0, G.exp(-p.xi0))
    return G.log(G.compose(G.inverse(carrier), p.g1))


def _iv_coeffs(xi0, dxi, phis, k, dim):
    """Monomial table of the initial-value interpolant."""
    coeffs = np.zeros((k + 1, dim))
    coeffs[0] = xi0
    top = dxi.copy()
    for j, phi in enumerate(phis, start=1):
        coeffs[j] = phi / factorial(j)
        top -= coeffs[j]
    coeffs[k] += top
    return coeffs


def _bv_coeffs(xi0, dxi, phis, q, k, dim):
    """Monomial table of the boundary-value (Hermite) interpolant."""
    coeffs = np.zeros((k + 1, dim))
    coeffs[0] = xi0
    if k == 3:
        d = phis[0]
        coeffs[1] = d
        coeffs[2] = 3.0 * dxi - 2.0 * d - q
        coeffs[3] = -2.0 * dxi + d + q
    elif k == 4:
        d, e = phis
        coeffs[1] = d
        coeffs[2] = e / 2.0
        coeffs[3] = 4.0 * dxi - 3.0 * d - e - q
        coeffs[4] = -3.0 * dxi + 2.0 * d + e / 2.0 + q
    else:
        d, e, f = phis
        coeffs[1] = d
        coeffs[2] = e / 2.0
        coeffs[3] = f / 6.0
        coeffs[4] = 5.0 * dxi - 4.0 * d - 1.5 * e - f / 3.0 - q
        coeffs[5] = -4.0 * dxi + 3.0 * d + e + f / 6.0 + q
    return coeffs


def initial_value_interp(p: TwoPointProblem) -> CoordinatePolynomial:
    """Order-k interpolant matching k - 1 start derivatives and g1.

    Requires xi0 = 0; use ``initial_value_interp_nonzero`` otherwise.
    """
    if float(np.linalg.norm(p.xi0)) != 0.0:
        raise ValueError("xi0 must be zero here; use the _nonzero variant")
    return initial_value_interp_nonzero(p)


def initial_value_interp_nonzero(p: TwoPointProblem) -> CoordinatePolynomial:
    """Initial-value interpolant continued from coordinate xi0."""
    k = p.order
    if len(p.jet0) < k - 1:
        raise ValueError(f"order {k} needs {k - 1} start derivatives")
    phis = _coordinate_jet(p, k - 1)
    xibar = _terminal_coordinate(p)
    return CoordinatePolynomial(
        _iv_coeffs(p.xi0, xibar - p.xi0, phis, k, p.group.alg_dim))


def boundary_value_interp(p: TwoPointProblem) -> CoordinatePolynomial:
    """Order-k interpolant matching k - 2 start derivatives and g1, v1.

    Requires xi0 = 0; use ``boundary_value_interp_nonzero`` otherwise.
    """
    if float(np.linalg.norm(p.xi0)) != 0.0:
        raise ValueError("xi0 must be zero here; use the _nonzero variant")
    return boundary_value_interp_nonzero(p)


def boundary_value_interp_nonzero(p: TwoPointProblem) -> CoordinatePolynomial:
    """Boundary-value interpolant continued from coordinate xi0."""
    k = p.order
    if p.v1 is None:
        raise ValueError("boundary-value interpolants need v1")
    if len(p.jet0) < k - 2:
        raise ValueError(f"order {k} needs {k - 2} start derivatives")
    phis = _coordinate_jet(p, k - 2)
    xibar = _terminal_coordinate(p)
    # The end slope follows from v(1) = dexp_{-xi(1)}(xi'(1)) at the full
    # terminal coordinate, independent of xi0.
    q = p.group.dexp_inv(-xibar) @ p.v1
    return CoordinatePolynomial(
        _bv_coeffs(p.xi0, xibar - p.xi0, phis, q, k, p.group.alg_dim))


def local_error_estimate(p: TwoPointProblem) -> np.ndarray:
    """Leading (tau^k) defect of the initial-value interpolant.

    Compares the interpolant against the series expansion of the exact
    coordinate curve through the same jet; requires a jet of length k.
    The result is the algebra-valued coefficient multiplying tau^k.
    """
    k = p.order
    if float(np.linalg.norm(p.xi0)) != 0.0:
        raise ValueError("the error estimate is for segments with xi0 = 0")
    if len(p.jet0) < k:
        raise ValueError(f"order {k} estimate needs a jet of length {k}")
    phis = phi_recursion(JetAtZero(p.group, p.jet0[:k]))
    xibar = _terminal_coordinate(p)
    est = xibar.copy()
    for j in range(1, k + 1):
        est -= phis[j - 1] / factorial(j)
    return est
