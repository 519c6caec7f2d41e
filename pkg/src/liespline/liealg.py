"""Matrix Lie group kernels for SO(3), SE(3) and SO(3)xR3.

Conventions
-----------
* Algebra vectors are flat numpy arrays with the rotational block first:
  so(3) uses shape (3,); se(3) and so(3)xR3 use shape (6,) laid out as
  [x, y] with x the rotational and y the translational part.
* Group elements are matrices: 3x3 for SO(3), 4x4 homogeneous for SE(3)
  and for SO(3)xR3.  The SO(3)xR3 element reuses the homogeneous
  container but composes as a direct product (rotations multiply,
  translations add), so composition must go through ``compose`` and not
  plain matrix multiplication.
* All trivializations are body-fixed: a curve g(t) = g0 exp(xi(t)) has
  velocity v = (g^-1 g')^vee = dexp_{-xi}(xi').  Operators below take
  the algebra point as their first argument and callers pass -xi
  explicitly where that convention requires it.
* exp(x, y) on SE(3) is [[exp(x~), dexp_x y], [0, 1]]; consequently
  log recovers y = dexp_inv_x(r).

Numerical policy
----------------
The rotation kernels

    alpha = sin(phi)/phi            beta  = sinc^2(phi/2)
    gamma = alpha/beta              delta = (1 - alpha)/phi^2
    eps   = (1 - gamma)/phi^2

are evaluated by trig closed forms for phi >= SMALL_ANGLE and by Taylor
series in mu = phi^2 below it.  Their mu-derivatives, which enter the
directional derivatives of dexp and dexp^-1, cancel catastrophically in
closed form for small and moderate phi (relative error ~1e-6 at
phi = 0.3 in double precision), so they are evaluated from mu power
series up to KERNEL_SERIES_LIMIT, where the truncated series is still
accurate to machine precision, and by closed forms above.  All kernels
are singular at phi = 2*pi; inputs that close to the branch point raise
AngleNearPi.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import AngleNearPi, NotOrthonormal

# Angle below which value kernels switch to Taylor series.
SMALL_ANGLE = 1.0e-4
# Angle below which the mu-derivative kernels are evaluated from series.
KERNEL_SERIES_LIMIT = 2.0
# Margin excluded around the log branch point at phi = pi.
BRANCH_MARGIN = 1.0e-6
# Rotation drift (Frobenius norm of R^T R - I) above which exp output is
# re-projected by one polar step.
ORTHO_DRIFT = 1.0e-13
# Drift above which matrices handed to log are rejected outright.
ORTHO_REJECT = 1.0e-6

_EYE3 = np.eye(3)

# Taylor coefficients in mu = phi^2 of the scalar kernels.  Exact values
# are (-1)^k/(2k+1)!, 2(-1)^k/(2k+2)!, (-1)^k/(2k+3)! and the Bernoulli
# row |B_2k+2|/(2k+2)! respectively; enough terms are kept for machine
# precision up to mu = KERNEL_SERIES_LIMIT^2.
_ALPHA_SERIES = np.array([
    1.0, -0.16666666666666666, 0.008333333333333333, -0.0001984126984126984,
    2.7557319223985893e-06, -2.505210838544172e-08, 1.6059043836821613e-10,
    -7.647163731819816e-13, 2.8114572543455206e-15, -8.22063524662433e-18,
    1.9572941063391263e-20, -3.868170170630684e-23, 6.446950284384474e-26,
    -9.183689863795546e-29, 1.1309962886447716e-31, -1.216125041553518e-34,
    1.151633562077195e-37, -9.67759295863189e-41,
])
_BETA_SERIES = np.array([
    1.0, -0.08333333333333333, 0.002777777777777778, -4.96031746031746e-05,
    5.511463844797178e-07, -4.17535139757362e-09, 2.294149119545945e-11,
    -9.55895466477477e-14, 3.123841393717245e-16, -8.22063524662433e-19,
    1.779358278490115e-21, -3.2234751421922368e-24, 4.959192526449595e-27,
    -6.559778474139676e-30, 7.539975257631811e-33, -7.600781509709487e-36,
    6.774315071042324e-39, -5.3764405325732727e-42,
])
_DELTA_SERIES = np.array([
    0.16666666666666666, -0.008333333333333333, 0.0001984126984126984,
    -2.7557319223985893e-06, 2.505210838544172e-08, -1.6059043836821613e-10,
    7.647163731819816e-13, -2.8114572543455206e-15, 8.22063524662433e-18,
    -1.9572941063391263e-20, 3.868170170630684e-23, -6.446950284384474e-26,
    9.183689863795546e-29, -1.1309962886447716e-31, 1.216125041553518e-34,
    -1.151633562077195e-37, 9.67759295863189e-41, -7.265460179153071e-44,
])
_EPS_SERIES = np.array([
    0.08333333333333333, 0.001388888888888889, 3.306878306878307e-05,
    8.267195767195768e-07, 2.08767569878681e-08, 5.284190138687493e-10,
    1.3382536530684679e-11, 3.3896802963225827e-13, 8.586062056277845e-15,
    2.174868698558062e-16, 5.5090028283602295e-18, 1.3954464685812522e-19,
    3.534707039629467e-21, 8.953517427037546e-23, 2.267952452337683e-24,
    5.744790668872202e-26, 1.455172475614865e-27, 3.6859949406653103e-29,
    9.336734257095045e-31, 2.36502241570063e-32, 5.990671762482134e-34,
    1.5174548844682903e-35, 3.843758125454189e-37, 9.736353072646691e-39,
])


class ScalarKernels(NamedTuple):
    """Rotation kernel values at a given angle; gamma*beta = alpha."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    eps: float


def skew(x: np.ndarray) -> np.ndarray:
    """3x3 skew matrix of x, so that skew(x) @ y = cross(x, y)."""
    return np.array([
        [0.0, -x[2], x[1]],
        [x[2], 0.0, -x[0]],
        [-x[1], x[0], 0.0],
    ])


def vee(X: np.ndarray) -> np.ndarray:
    """Inverse of skew for a 3x3 antisymmetric matrix."""
    return np.array([X[2, 1], X[0, 2], X[1, 0]])


def _series_value(coeffs: np.ndarray, mu: float) -> float:
    f = 0.0
    for c in coeffs[::-1]:
        f = f * mu + c
    return f


def _series_derivs(coeffs: np.ndarray, mu: float):
    """Value and first three mu-derivatives of sum c_k mu^k."""
    n = len(coeffs)
    f0 = _series_value(coeffs, mu)
    d1 = np.array([k * coeffs[k] for k in range(1, n)])
    f1 = _series_value(d1, mu)
    d2 = np.array([k * d1[k] for k in range(1, n - 1)])
    f2 = _series_value(d2, mu)
    d3 = np.array([k * d2[k] for k in range(1, n - 2)])
    f3 = _series_value(d3, mu)
    return f0, f1, f2, f3


def scalar_kernels(phi: float) -> ScalarKernels:
    """Value kernels at rotation angle phi (radians, phi >= 0)."""
    mu = phi * phi
    if phi < SMALL_ANGLE:
        alpha = _series_value(_ALPHA_SERIES[:4], mu)
        beta = _series_value(_BETA_SERIES[:4], mu)
        delta = _series_value(_DELTA_SERIES[:4], mu)
        eps = _series_value(_EPS_SERIES[:4], mu)
        gamma = alpha / beta
        return ScalarKernels(alpha, beta, gamma, delta, eps)
    s, c = np.sin(phi), np.cos(phi)
    alpha = s / phi
    half = np.sin(0.5 * phi) / (0.5 * phi)
    beta = half * half
    if abs(beta) < 1.0e-8:
        raise AngleNearPi(
            f"rotation angle {phi:.6f} too close to 2*pi for dexp kernels")
    gamma = alpha / beta
    delta = (1.0 - alpha) / mu
    eps = (1.0 - gamma) / mu
    return ScalarKernels(alpha, beta, gamma, delta, eps)


def _dexp_family(phi: float):
    """(b0..b3, d0..d3) for dexp = I + b(mu) x~ + d(mu) x~^2.

    b = beta/2, d = delta, derivatives taken with respect to mu = phi^2.
    """
    mu = phi * phi
    if phi < KERNEL_SERIES_LIMIT:
        b0, b1, b2, b3 = _series_derivs(_BETA_SERIES, mu)
        d0, d1, d2, d3 = _series_derivs(_DELTA_SERIES, mu)
        return 0.5 * b0, 0.5 * b1, 0.5 * b2, 0.5 * b3, d0, d1, d2, d3
    k = scalar_kernels(phi)
    s, c = np.sin(phi), np.cos(phi)
    a1 = (c * phi - s) / (2.0 * phi ** 3)
    a2 = (3.0 * s - 3.0 * c * phi - s * mu) / (4.0 * phi ** 5)
    a3 = (-c * phi ** 3 + 6.0 * s * mu + 15.0 * c * phi - 15.0 * s) \
        / (8.0 * phi ** 7)
    b1 = (k.alpha - k.beta) / mu
    b2 = (c * mu - 5.0 * s * phi + 8.0 - 8.0 * c) / (2.0 * mu ** 3)
    b3 = (-s * phi ** 3 - 9.0 * c * mu + 33.0 * s * phi - 48.0 + 48.0 * c) \
        / (4.0 * mu ** 4)
    d1 = (-a1 - k.delta) / mu
    d2 = (-a2 - 2.0 * d1) / mu
    d3 = (-a3 - 3.0 * d2) / mu
    return 0.5 * k.beta, 0.5 * b1, 0.5 * b2, 0.5 * b3, k.delta, d1, d2, d3


def _dexpinv_family(phi: float):
    """(b0..b3, d0..d3) for dexp^-1 = I - x~/2 + eps(mu) x~^2."""
    mu = phi * phi
    if phi < KERNEL_SERIES_LIMIT:
        e0, e1, e2, e3 = _series_derivs(_EPS_SERIES, mu)
        return -0.5, 0.0, 0.0, 0.0, e0, e1, e2, e3
    k = scalar_kernels(phi)
    s, c = np.sin(phi), np.cos(phi)
    a1 = (c * phi - s) / (2.0 * phi ** 3)
    a2 = (3.0 * s - 3.0 * c * phi - s * mu) / (4.0 * phi ** 5)
    a3 = (-c * phi ** 3 + 6.0 * s * mu + 15.0 * c * phi - 15.0 * s) \
        / (8.0 * phi ** 7)
    b1 = (k.alpha - k.beta) / mu
    b2 = (c * mu - 5.0 * s * phi + 8.0 - 8.0 * c) / (2.0 * mu ** 3)
    b3 = (-s * phi ** 3 - 9.0 * c * mu + 33.0 * s * phi - 48.0 + 48.0 * c) \
        / (4.0 * mu ** 4)
    g1 = (a1 - k.gamma * b1) / k.beta
    g2 = (a2 - 2.0 * g1 * b1 - k.gamma * b2) / k.beta
    g3 = (a3 - 3.0 * g2 * b1 - 3.0 * g1 * b2 - k.gamma * b3) / k.beta
    e1 = (-g1 - k.eps) / mu
    e2 = (-g2 - 2.0 * e1) / mu
    e3 = (-g3 - 3.0 * e2) / mu
    return -0.5, 0.0, 0.0, 0.0, k.eps, e1, e2, e3


# ---------------------------------------------------------------------------
# Kernel-family derivative engine.  Every operator here has the shape
# F(x) = c0 I + b(mu) x~ + d(mu) x~^2 with mu = |x|^2; its directional
# derivatives follow from the product rule with d(mu)/dx{u} = 2 x.u.

def _fam_value(fam, x):
    b0, d0 = fam[0], fam[4]
    sk = skew(x)
    return _EYE3 + b0 * sk + d0 * (sk @ sk)


def _sym(a_sk, b_sk):
    return a_sk @ b_sk + b_sk @ a_sk


def _fam_d1(fam, x, u):
    b0, b1, _, _, d0, d1, _, _ = fam
    xs, us = skew(x), skew(u)
    xu = float(x @ u)
    return (2.0 * xu) * (b1 * xs + d1 * (xs @ xs)) \
        + b0 * us + d0 * _sym(xs, us)


def _fam_d2(fam, x, u, w):
    _, b1, b2, _, d0, d1, d2, _ = fam
    xs, us, ws = skew(x), skew(u), skew(w)
    xx = xs @ xs
    xu, xw, uw = float(x @ u), float(x @ w), float(u @ w)
    out = (4.0 * xu * xw) * (b2 * xs + d2 * xx)
    out += (2.0 * uw) * (b1 * xs + d1 * xx)
    out += (2.0 * xu) * (b1 * ws + d1 * _sym(xs, ws))
    out += (2.0 * xw) * (b1 * us + d1 * _sym(xs, us))
    out += d0 * _sym(us, ws)
    return out


def _fam_d3(fam, x, u, w, z):
    _, b1, b2, b3, _, d1, d2, d3 = fam
    xs, us, ws, zs = skew(x), skew(u), skew(w), skew(z)
    xx = xs @ xs
    xu, xw, xz = float(x @ u), float(x @ w), float(x @ z)
    uw, uz, wz = float(u @ w), float(u @ z), float(w @ z)
    out = (8.0 * xu * xw * xz) * (b3 * xs + d3 * xx)
    out += (4.0 * (uw * xz + uz * xw + wz * xu)) * (b2 * xs + d2 * xx)
    out += (4.0 * xu * xw) * (b2 * zs + d2 * _sym(xs, zs))
    out += (4.0 * xu * xz) * (b2 * ws + d2 * _sym(xs, ws))
    out += (4.0 * xw * xz) * (b2 * us + d2 * _sym(xs, us))
    out += (2.0 * uw) * (b1 * zs + d1 * _sym(xs, zs))
    out += (2.0 * uz) * (b1 * ws + d1 * _sym(xs, ws))
    out += (2.0 * wz) * (b1 * us + d1 * _sym(xs, us))
    out += (2.0 * xu * d1) * _sym(ws, zs)
    out += (2.0 * xw * d1) * _sym(us, zs)
    out += (2.0 * xz * d1) * _sym(us, ws)
    return out


# ---------------------------------------------------------------------------
# SO(3) primitives.

def _tidy_rotation(R: np.ndarray) -> np.ndarray:
    """One polar projection step if orthonormality drifted."""
    drift = R.T @ R - _EYE3
    if np.linalg.norm(drift) > ORTHO_DRIFT:
        R = R @ (_EYE3 - 0.5 * drift)
    return R


def _exp_so3(x: np.ndarray) -> np.ndarray:
    phi = float(np.linalg.norm(x))
    k = scalar_kernels(phi)
    sk = skew(x)
    R = _EYE3 + k.alpha * sk + (0.5 * k.beta) * (sk @ sk)
    return _tidy_rotation(R)


def _log_so3(R: np.ndarray) -> np.ndarray:
    drift = float(np.linalg.norm(R.T @ R - _EYE3))
    if drift > ORTHO_REJECT or np.linalg.det(R) < 0.0:
        raise NotOrthonormal(
            f"matrix is not a rotation (orthonormality drift {drift:.3e})")
    w = 0.5 * vee(R - R.T)
    cos_phi = 0.5 * (np.trace(R) - 1.0)
    phi = float(np.arctan2(np.linalg.norm(w), cos_phi))
    if phi > np.pi - BRANCH_MARGIN:
        raise AngleNearPi(
            f"rotation angle {phi:.9f} within branch margin of pi")
    alpha = scalar_kernels(phi).alpha
    return w / alpha


# ---------------------------------------------------------------------------
# Group front end.

_VALID_TAGS = ("so3", "se3", "so3r3")


class LieGroup:
    """Operations for one of the tags 'so3', 'se3', 'so3r3'.

    Use the module singletons SO3, SE3, SO3R3 or ``group_from_tag``.
    Mixing elements of different tags is the caller's error; shapes are
    checked only as far as cheap.
    """

    def __init__(self, tag: str):
        if tag not in _VALID_TAGS:
            raise ValueError(f"unknown group tag {tag!r}")
        self.tag = tag
        self.alg_dim = 3 if tag == "so3" else 6
        self.mat_dim = 3 if tag == "so3" else 4

    def __repr__(self):
        return f"LieGroup({self.tag!r})"

    # -- plumbing -----------------------------------------------------
    def identity(self) -> np.ndarray:
        return np.eye(self.mat_dim)

    def compose(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        if self.tag == "so3r3":
            out = np.eye(4)
            out[:3, :3] = g[:3, :3] @ h[:3, :3]
            out[:3, 3] = g[:3, 3] + h[:3, 3]
            return out
        return g @ h

    def inverse(self, g: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            return g.T.copy()
        out = np.eye(4)
        R = g[:3, :3]
        out[:3, :3] = R.T
        if self.tag == "se3":
            out[:3, 3] = -R.T @ g[:3, 3]
        else:
            out[:3, 3] = -g[:3, 3]
        return out

    def rotation(self, g: np.ndarray) -> np.ndarray:
        return g[:3, :3]

    def translation(self, g: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            raise ValueError("SO(3) elements carry no translation")
        return g[:3, 3]

    def from_parts(self, R: np.ndarray, r=None) -> np.ndarray:
        if self.tag == "so3":
            return np.asarray(R, dtype=float)
        out = np.eye(4)
        out[:3, :3] = R
        out[:3, 3] = np.zeros(3) if r is None else np.asarray(r, dtype=float)
        return out

    def project(self, g: np.ndarray) -> np.ndarray:
        """Re-orthonormalize the rotation block by full polar projection."""
        R = g[:3, :3]
        U, _, Vt = np.linalg.svd(R)
        Rp = U @ Vt
        if np.linalg.det(Rp) < 0.0:
            U[:, -1] = -U[:, -1]
            Rp = U @ Vt
        if self.tag == "so3":
            return Rp
        return self.from_parts(Rp, g[:3, 3])

    def orthonormality_drift(self, g: np.ndarray) -> float:
        R = g[:3, :3]
        return float(np.linalg.norm(R.T @ R - _EYE3))

    # -- algebra ------------------------------------------------------
    def bracket(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            return np.cross(a, b)
        out = np.empty(6)
        out[:3] = np.cross(a[:3], b[:3])
        if self.tag == "se3":
            out[3:] = np.cross(a[:3], b[3:]) - np.cross(b[:3], a[3:])
        else:
            out[3:] = 0.0
        return out

    def ad_matrix(self, a: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            return skew(a)
        out = np.zeros((6, 6))
        xs = skew(a[:3])
        out[:3, :3] = xs
        out[3:, 3:] = xs
        if self.tag == "se3":
            out[3:, :3] = skew(a[3:])
        else:
            out[3:, 3:] = 0.0
        return out

    def Ad_matrix(self, g: np.ndarray) -> np.ndarray:
        R = g[:3, :3]
        if self.tag == "so3":
            return R.copy()
        out = np.zeros((6, 6))
        out[:3, :3] = R
        if self.tag == "se3":
            out[3:, :3] = skew(g[:3, 3]) @ R
            out[3:, 3:] = R
        else:
            out[3:, 3:] = _EYE3
        return out

    # -- exponential map ----------------------------------------------
    def exp(self, a: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            return _exp_so3(a)
        R = _exp_so3(a[:3])
        if self.tag == "se3":
            phi = float(np.linalg.norm(a[:3]))
            fam = _dexp_family(phi)
            r = _fam_value(fam, a[:3]) @ a[3:]
        else:
            r = a[3:]
        return self.from_parts(R, r)

    def log(self, g: np.ndarray) -> np.ndarray:
        if self.tag == "so3":
            return _log_so3(g)
        x = _log_so3(g[:3, :3])
        if self.tag == "se3":
            phi = float(np.linalg.norm(x))
            fam = _dexpinv_family(phi)
            y = _fam_value(fam, x) @ g[:3, 3]
        else:
            y = g[:3, 3].copy()
        return np.concatenate([x, y])

    def log_near(self, g: np.ndarray, hint: np.ndarray) -> np.ndarray:
        """Logarithm on the branch closest to ``hint``.

        Unlike ``log`` this accepts rotations at or beyond angle pi: the
        rotational coordinate is selected among the 2*pi-shifted branches
        to minimize the distance to the hint, which lets callers track a
        continuous coordinate curve xi(t) past the principal branch.  The
        returned rotation norm stays below 2*pi.
        """
        R = g[:3, :3] if self.tag != "so3" else g
        w = 0.5 * vee(R - R.T)
        wn = float(np.linalg.norm(w))
        cos_phi = 0.5 * (np.trace(R) - 1.0)
        phi = float(np.arctan2(wn, cos_phi))
        hint_rot = hint[:3] if self.tag != "so3" else hint
        if phi < 0.9 * np.pi:
            x = w / scalar_kernels(phi).alpha if phi > 0.0 else w
        else:
            # Antisymmetric part degenerates near pi; recover the axis
            # from the symmetric part, x x^T = (2/beta)(sym(R) - I) + phi^2 I.
            k = scalar_kernels(phi)
            M = (2.0 / k.beta) * (0.5 * (R + R.T) - _EYE3) \
                + (phi * phi) * _EYE3
            i = int(np.argmax(np.diag(M)))
            xi_i = np.sqrt(max(M[i, i], 0.0))
            axis = M[:, i] / (xi_i if xi_i > 0.0 else 1.0)
            nrm = float(np.linalg.norm(axis))
            x = axis * (phi / nrm) if nrm > 0.0 else axis
            # Fix the overall sign from the antisymmetric part when it is
            # still informative, otherwise from the hint.
            ref = w if wn > 1.0e-8 and phi < np.pi else hint_rot
            if float(x @ ref) < 0.0:
                x = -x
        if phi > 0.0:
            shift = (2.0 * np.pi / phi) * x
            cands = (x, x - shift, x + shift)
        else:
            cands = (x,)
        x = min(cands, key=lambda c: float(np.linalg.norm(c - hint_rot)))
        if self.tag == "so3":
            return x
        if self.tag == "se3":
            fam = _dexpinv_family(float(np.linalg.norm(x)))
            y = _fam_value(fam, x) @ g[:3, 3]
        else:
            y = g[:3, 3].copy()
        return np.concatenate([x, y])

    # -- dexp and friends ----------------------------------------------
    # SE(3) blocks: with A(x) the SO(3) operator and (u, v) the rotational
    # and translational parts of the direction, each operator is
    # [[A, 0], [L, A]] with L the chain-rule derivative of A(x) y.
    def _blocks(self, family, a, dirs):
        x = a[:3] if self.tag != "so3" else a
        phi = float(np.linalg.norm(x))
        fam = family(phi)
        order = len(dirs)
        if self.tag == "so3":
            if order == 0:
                return _fam_value(fam, a)
            if order == 1:
                return _fam_d1(fam, a, dirs[0])
            return _fam_d2(fam, a, dirs[0], dirs[1])
        us = [d[:3] for d in dirs]
        vs = [d[3:] for d in dirs]
        if order == 0:
            A = _fam_value(fam, x)
        elif order == 1:
            A = _fam_d1(fam, x, us[0])
        else:
            A = _fam_d2(fam, x, us[0], us[1])
        out = np.zeros((6, 6))
        out[:3, :3] = A
        out[3:, 3:] = A
        if self.tag == "so3r3":
            if order == 0:
                out[3:, 3:] = _EYE3
            else:
                out[3:, 3:] = 0.0
            return out
        y = a[3:]
        if order == 0:
            L = _fam_d1(fam, x, y)
        elif order == 1:
            L = _fam_d2(fam, x, us[0], y) + _fam_d1(fam, x, vs[0])
        else:
            L = _fam_d3(fam, x, us[0], us[1], y) \
                + _fam_d2(fam, x, us[0], vs[1]) \
                + _fam_d2(fam, x, us[1], vs[0])
        out[3:, :3] = L
        return out

    def dexp(self, a: np.ndarray) -> np.ndarray:
        """Right-trivialized differential of exp at a, as a matrix."""
        return self._blocks(_dexp_family, a, ())

    def dexp_inv(self, a: np.ndarray) -> np.ndarray:
        """Matrix inverse of dexp(a), in closed form."""
        return self._blocks(_dexpinv_family, a, ())

    def d_dexp(self, a: np.ndarray, da: np.ndarray) -> np.ndarray:
        """Directional derivative of a -> dexp(a) along da."""
        return self._blocks(_dexp_family, a, (da,))

    def d_dexp_inv(self, a: np.ndarray, da: np.ndarray) -> np.ndarray:
        """Directional derivative of a -> dexp_inv(a) along da."""
        return self._blocks(_dexpinv_family, a, (da,))

    def d2_dexp(self, a: np.ndarray, da1: np.ndarray,
                da2: np.ndarray) -> np.ndarray:
        """Second directional derivative of dexp; symmetric in da1, da2."""
        return self._blocks(_dexp_family, a, (da1, da2))

    def d2_dexp_inv(self, a: np.ndarray, da1: np.ndarray,
                    da2: np.ndarray) -> np.ndarray:
        """Second directional derivative of dexp_inv."""
        return self._blocks(_dexpinv_family, a, (da1, da2))


SO3 = LieGroup("so3")
SE3 = LieGroup("se3")
SO3R3 = LieGroup("so3r3")

_BY_TAG = {"so3": SO3, "se3": SE3, "so3r3": SO3R3}


def group_from_tag(tag: str) -> LieGroup:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise ValueError(f"unknown group tag {tag!r}") from None
