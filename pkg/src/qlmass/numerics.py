"""Finite-difference stencils and quadrature on uniform 1-D grids.

Endpoints are handled in one of two ways:

* ``parity=+1`` / ``parity=-1``: the samples are extended past each end by
  even / odd reflection, which is exact for functions of the polar angle on a
  surface of revolution (``alpha`` even, ``beta`` odd at both poles). The
  7-point 6th-order centred stencil is then used at every node.
* ``parity=None``: 5-point 4th-order centred stencil in the interior and
  4th-order one-sided stencils on the first and last two nodes.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.integrate import simpson

__all__ = [
    "fd_weights",
    "d1",
    "d2",
    "odd_quotient",
    "simpson_uniform",
    "pole_odd_integral",
    "cumulative_integral",
    "uniform_step",
]

EVEN = 1
ODD = -1


@lru_cache(maxsize=None)
def fd_weights(offsets: tuple, order: int) -> np.ndarray:
    """Weights ``w`` with ``f^(order)(0) ~ sum w_k f(offsets[k])`` for unit spacing."""
    x = np.asarray(offsets, dtype=float)
    n = len(x)
    vander = np.vander(x, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[order] = math.factorial(order)
    return np.linalg.solve(vander, rhs)


_C1 = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_C2 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_C1_6 = np.array([-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0]) / 60.0
_C2_6 = np.array([2.0, -27.0, 270.0, -490.0, 270.0, -27.0, 2.0]) / 180.0
_GHOSTS = 3


def _pad(f: np.ndarray, parity: int, ghosts: int = _GHOSTS) -> np.ndarray:
    left = parity * f[ghosts:0:-1]
    right = parity * f[-2:-2 - ghosts:-1]
    return np.concatenate([left, f, right], axis=0)


def _centred(fp: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    n = fp.shape[0] - (len(coeffs) - 1)
    out = np.zeros((n,) + fp.shape[1:])
    for k, c in enumerate(coeffs):
        if c != 0.0:
            out += c * fp[k:k + n]
    return out


def _apply(f: np.ndarray, h: float, parity, order: int) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape[0] < 6:
        raise ValueError("need at least 6 samples for the difference stencils")
    if parity is not None:
        coeffs = _C1_6 if order == 1 else _C2_6
        return _centred(_pad(f, parity), coeffs) / h**order

    coeffs = _C1 if order == 1 else _C2

    out = np.empty_like(f)
    out[2:-2] = _centred(f, coeffs)
    width = 5 if order == 1 else 6
    for node in (0, 1):
        offs = tuple(range(-node, width - node))
        w = fd_weights(offs, order)
        out[node] = np.tensordot(w, f[:width], axes=(0, 0))
        out[-1 - node] = np.tensordot(w[::-1] * (-1) ** order, f[-width:], axes=(0, 0))
    return out / h**order


def d1(f, h: float, parity=None) -> np.ndarray:
    """First derivative along axis 0."""
    return _apply(f, h, parity, 1)


def d2(f, h: float, parity=None) -> np.ndarray:
    """Second derivative along axis 0."""
    return _apply(f, h, parity, 2)


def odd_quotient(num: np.ndarray, den: np.ndarray, h: float) -> np.ndarray:
    """``num/den`` for two functions odd at both poles; poles by L'Hopital."""
    num = np.asarray(num, dtype=float)
    den = np.asarray(den, dtype=float)
    out = np.empty_like(num)
    out[1:-1] = num[1:-1] / den[1:-1]
    dn = d1(num, h, ODD)
    dd = d1(den, h, ODD)
    out[0] = dn[0] / dd[0]
    out[-1] = dn[-1] / dd[-1]
    return out


def uniform_step(t: np.ndarray, rtol: float = 1e-10) -> float | None:
    """Grid spacing if ``t`` is uniform to ``rtol`` of its length, else None."""
    dt = np.diff(t)
    h = (t[-1] - t[0]) / (len(t) - 1)
    if np.max(np.abs(dt - h)) <= rtol * abs(t[-1] - t[0]):
        return float(h)
    return None


def simpson_uniform(y: np.ndarray, h: float) -> float:
    """Composite Simpson rule on a uniform grid (axis 0).

    With an even sample count (odd number of panels) the rule is closed with
    a Simpson 3/8 panel, averaged over placing it at either end so the result
    is symmetric under ``t -> L - t``.
    """
    y = np.asarray(y, dtype=float)
    n = y.shape[0]
    if n % 2 == 1 or n < 4:
        return float(simpson(y, dx=h, axis=0))
    tail = 3.0 * h / 8.0 * (y[-4] + 3.0 * y[-3] + 3.0 * y[-2] + y[-1])
    head = 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3])
    a = simpson(y[:n - 3], dx=h, axis=0) + tail
    b = head + simpson(y[3:], dx=h, axis=0)
    return float(0.5 * (a + b))


def pole_odd_integral(y: np.ndarray, h: float) -> float:
    """Integral of samples that are odd about both endpoints (e.g. ``f beta alpha``).

    Trapezoid rule with the ``h^2`` and ``h^4`` Euler-Maclaurin end corrections;
    the end derivatives come from odd-reflected stencils, giving 6th order.
    """
    y = np.asarray(y, dtype=float)
    trap = h * (np.sum(y) - 0.5 * (y[0] + y[-1]))
    g1 = d1(y, h, ODD)
    yp = _pad(y, ODD, 2)
    g3 = (-yp[:-4] + 2.0 * yp[1:-3] - 2.0 * yp[3:-1] + yp[4:]) / (2.0 * h**3)
    return float(trap - h * h / 12.0 * (g1[-1] - g1[0]) + h**4 / 720.0 * (g3[-1] - g3[0]))


def cumulative_integral(f: np.ndarray, h: float, parity=None) -> np.ndarray:
    """Running integral from the first node, free of odd/even ripple.

    With ``parity`` each cell ``[t_i, t_{i+1}]`` is integrated with the quintic
    through ``t_{i-2} .. t_{i+3}`` (reflected ghosts at the ends, 6th order).
    Without it the cubic through ``t_{i-1} .. t_{i+2}`` is used, with one-sided
    cubics on the end cells (4th order).
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[0]
    if parity is not None:
        fp = _pad(f, parity, 2)
        w = np.array([11.0, -93.0, 802.0, 802.0, -93.0, 11.0]) * (h / 1440.0)
        cells = sum(c * fp[k:k + n - 1] for k, c in enumerate(w))
    else:
        cells = np.empty(n - 1)
        cells[1:-1] = (-f[:-3] + 13.0 * f[1:-2] + 13.0 * f[2:-1] - f[3:]) * (h / 24.0)
        cells[0] = (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) * (h / 24.0)
        cells[-1] = (9.0 * f[-1] + 19.0 * f[-2] - 5.0 * f[-3] + f[-4]) * (h / 24.0)
    out = np.zeros(n)
    out[1:] = np.cumsum(cells)
    return out
