"""Taylor coefficients of exponential coordinates from a velocity jet.

A curve g(t) = g(0) exp(xi(t)) with body-fixed velocity
v = (g^-1 g')^vee satisfies the reconstruction equation
xi' = dexp^-1_{-xi} v with xi(0) = 0.  Given the velocity jet
v0, v0', ..., v0^(k-1) at t = 0, the coordinate jet Phi_j = xi^(j)(0)
follows from the recursion

    Phi_k = v0^(k-1) - (k-1)! sum_{j=1}^{k-1} (1/(j-1)!) F_kj Phi_j,
    F_kj  = sum_{l=1}^{k-j} ((-1)^l/(l+1)!)
            sum_{i_1+...+i_l+j = k} ad_{Y_i1} ... ad_{Y_il},
    Y_i   = Phi_i / i!,  Y_0 = 0.

The compositions range over nonnegative i_m, but terms containing a zero
index vanish because Y_0 = 0, so only positive compositions are
enumerated.  The right-invariant convention (spatial velocity
v = (g' g^-1)^vee) drops the (-1)^l factor.

Collecting powers of tau in xi(tau) = sum_j tau^j/j! Phi_j yields the
extrapolation polynomial

    xi(tau) = sum_{j=1}^{k} tau^j/j! v0^(j-1) + sum_{r=3}^{k} tau^r a_r,

with bracket corrections a_r = (Phi_r - v0^(r-1))/r!.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import List

import numpy as np

from .errors import UnsupportedOrder
from .liealg import LieGroup
from .poly import CoordinatePolynomial

# Orders above this are untested territory and are refused.
MAX_ORDER = 8


@dataclass
class JetAtZero:
    """Body-fixed velocity derivatives [v0, v0', ...] at the start point."""

    group: LieGroup
    derivs: List[np.ndarray] = field(default_factory=list)

    def __post_init__(self):
        self.derivs = [np.asarray(d, dtype=float) for d in self.derivs]

    @property
    def order(self) -> int:
        return len(self.derivs)


def _positive_compositions(total: int, parts: int):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions(total - first, parts - 1):
            yield (first,) + rest


def phi_recursion(jet: JetAtZero, right_invariant: bool = False):
    """Coordinate jet [Phi_1, ..., Phi_k] from a velocity jet of length k."""
    k = jet.order
    if k > MAX_ORDER:
        raise UnsupportedOrder(f"jet order {k} exceeds supported {MAX_ORDER}")
    group = jet.group
    n = group.alg_dim
    phis: List[np.ndarray] = [np.zeros(n)]
    ad_y = [np.zeros((n, n))]
    for m in range(1, k + 1):
        acc = jet.derivs[m - 1].copy()
        for j in range(1, m):
            corr = np.zeros(n)
            for l in range(1, m - j + 1):
                sign = 1.0 if right_invariant else (-1.0) ** l
                coef = sign / factorial(l + 1)
                for comp in _positive_compositions(m - j, l):
                    term = phis[j]
                    for idx in reversed(comp):
                        term = ad_y[idx] @ term
                    corr += coef * term
            acc -= (factorial(m - 1) / factorial(j - 1)) * corr
        phis.append(acc)
        ad_y.append(group.ad_matrix(acc / factorial(m)))
    return phis[1:]


def a_coefficients(jet: JetAtZero, k: int):
    """Bracket corrections [a_3, ..., a_k]; empty list for k < 3."""
    if k > MAX_ORDER:
        raise UnsupportedOrder(f"order {k} exceeds supported {MAX_ORDER}")
    if k < 3:
        return []
    if jet.order < k:
        raise ValueError(f"order {k} needs a jet of length {k}, "
                         f"got {jet.order}")
    phis = phi_recursion(JetAtZero(jet.group, jet.derivs[:k]))
    return [(phis[r - 1] - jet.derivs[r - 1]) / factorial(r)
            for r in range(3, k + 1)]


def extrapolate(jet: JetAtZero, k: int) -> CoordinatePolynomial:
    """Degree-k polynomial xi(tau) matching the velocity jet at tau = 0.

    The polynomial agrees with the exact coordinate curve to local order
    k + 1.  Requires a jet of length at least k.
    """
    if k < 1:
        raise ValueError("order must be at least 1")
    if k > MAX_ORDER:
        raise UnsupportedOrder(f"order {k} exceeds supported {MAX_ORDER}")
    if jet.order < k:
        raise ValueError(f"order {k} needs a jet of length {k}, "
                         f"got {jet.order}")
    phis = phi_recursion(JetAtZero(jet.group, jet.derivs[:k]))
    coeffs = np.zeros((k + 1, jet.group.alg_dim))
    for j in range(1, k + 1):
        coeffs[j] = phis[j - 1] / factorial(j)
    return CoordinatePolynomial(coeffs)
