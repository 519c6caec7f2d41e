"""Shared oracles: brute-force matrix exp/log, finite differences,
Bernoulli series and polynomial reference motions."""

import numpy as np
import pytest
from scipy.linalg import expm, logm

from liespline.liealg import SE3, SO3, SO3R3, LieGroup, skew, vee
from liespline.twopoint import xi_jet_to_v_jet

GROUPS = (SO3, SE3, SO3R3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def rand_alg(group: LieGroup, rng, angle=2.5, trans=2.0) -> np.ndarray:
    """Random algebra vector with rotation angle uniform in (0, angle)."""
    w = rng.standard_normal(3)
    w *= rng.uniform(0.05, angle) / np.linalg.norm(w)
    if group.tag == "so3":
        return w
    return np.concatenate([w, rng.uniform(-trans, trans, 3)])


def rand_pose(group: LieGroup, rng, angle=2.5) -> np.ndarray:
    return group.exp(rand_alg(group, rng, angle=angle))


def hat(group: LieGroup, a: np.ndarray) -> np.ndarray:
    if group.tag == "so3":
        return skew(a)
    M = np.zeros((4, 4))
    M[:3, :3] = skew(a[:3])
    M[:3, 3] = a[3:]
    return M


def oracle_exp(group: LieGroup, a: np.ndarray) -> np.ndarray:
    """Matrix exponential of the hat form; componentwise for the
    direct product, whose translation enters without coupling."""
    if group.tag == "so3r3":
        g = np.eye(4)
        g[:3, :3] = expm(skew(a[:3]))
        g[:3, 3] = a[3:]
        return g
    return expm(hat(group, a))


def oracle_log(group: LieGroup, g: np.ndarray) -> np.ndarray:
    if group.tag == "so3":
        return vee(np.real(logm(g)))
    if group.tag == "so3r3":
        return np.concatenate([vee(np.real(logm(g[:3, :3]))), g[:3, 3]])
    L = np.real(logm(g))
    return np.concatenate([vee(L[:3, :3]), L[:3, 3]])


def central_diff(f, x0, h=1e-6):
    return (f(x0 + h) - f(x0 - h)) / (2.0 * h)


class PolyMotion:
    """Curve exp(xi(t)) with xi a polynomial without constant term."""

    def __init__(self, group: LieGroup, coeffs):
        self.group = group
        self.coeffs = [np.asarray(c, dtype=float) for c in coeffs]

    def xi_jet(self, t: float, s: int = 3):
        jet = [np.zeros(self.group.alg_dim) for _ in range(s + 1)]
        for j, c in enumerate(self.coeffs):
            p = j + 1
            fac = 1.0
            for m in range(min(s, p) + 1):
                jet[m] = jet[m] + fac * t ** (p - m) * c
                fac *= p - m
        return jet

    def pose(self, t: float) -> np.ndarray:
        return self.group.exp(self.xi_jet(t, 0)[0])

    def v_jet(self, t: float, s: int = 0):
        jet = self.xi_jet(t, s + 1)
        return xi_jet_to_v_jet(self.group, jet[0], jet[1:])

    def velocity(self, t: float) -> np.ndarray:
        return self.v_jet(t, 0)[0]


def rand_quartic(group: LieGroup, rng, scale=0.25) -> PolyMotion:
    coeffs = [rng.uniform(-scale, scale, group.alg_dim) for _ in range(4)]
    return PolyMotion(group, coeffs)
