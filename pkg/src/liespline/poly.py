"""Vector-valued polynomials in the normalized segment parameter tau."""

from __future__ import annotations

import numpy as np


class CoordinatePolynomial:
    """Polynomial tau -> xi(tau) in monomial form with derivative access.

    ``coeffs`` has shape (degree + 1, dim); row j multiplies tau^j.  The
    first three tau-derivatives are available; the target interval is
    always the normalized [0, 1] and any time scaling is the caller's.
    """

    def __init__(self, coeffs: np.ndarray):
        self.coeffs = np.asarray(coeffs, dtype=float)
        if self.coeffs.ndim != 2:
            raise ValueError("coeffs must be (degree + 1, dim)")

    @property
    def degree(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    def _eval(self, coeffs: np.ndarray, tau: float) -> np.ndarray:
        out = np.zeros(coeffs.shape[1])
        for row in coeffs[::-1]:
            out = out * tau + row
        return out

    def value(self, tau: float) -> np.ndarray:
        return self._eval(self.coeffs, tau)

    def deriv1(self, tau: float) -> np.ndarray:
        c = self.coeffs
        d = c[1:] * np.arange(1, len(c))[:, None]
        return self._eval(d, tau) if len(d) else np.zeros(self.dim)

    def deriv2(self, tau: float) -> np.ndarray:
        c = self.coeffs
        d = c[2:] * (np.arange(2, len(c)) * np.arange(1, len(c) - 1))[:, None]
        return self._eval(d, tau) if len(d) else np.zeros(self.dim)

    def deriv3(self, tau: float) -> np.ndarray:
        c = self.coeffs
        n = len(c)
        if n < 4:
            return np.zeros(self.dim)
        k = np.arange(3, n)
        d = c[3:] * (k * (k - 1) * (k - 2))[:, None]
        return self._eval(d, tau)

    def jet(self, tau: float, s: int = 2):
        """(value, first s derivatives) at tau."""
        out = [self.value(tau)]
        for fn in (self.deriv1, self.deriv2, self.deriv3)[:s]:
            out.append(fn(tau))
        return out

    def __call__(self, tau: float) -> np.ndarray:
        return self.value(tau)
