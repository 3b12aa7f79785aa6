"""Generating polynomials and their trigonometric ground truth.

The generalized cosine for the A2 root system is

    h(u, v) = (h1, h2),   h1 = e^(-2*pi*i*u) + e^(-2*pi*i*v) + e^(2*pi*i*(u+v)),

with h2 the complex conjugate of h1.  The three exponentials are the roots
of t^3 - h1*t^2 + h2*t - 1, so their d-th power sums are polynomials
p_d(h1, h2) obeying the Newton recurrence

    p_0 = 3,  p_1 = x,  p_2 = x^2 - 2y,  p_k = x*p_(k-1) - y*p_(k-2) + p_(k-3).

From the power sums we assemble:

    P_d = p_d(x, y) + p_d(y, x)                  (folding polynomial)
    Q_d = omega*p_d(x, y) + omega^2*p_d(y, x)    (shifted folding polynomial)

Q_d satisfies Q_d(h(u, v)) = H_d(u, v), the phase-shifted cosine sum of
trig_H.  That identity rests on the phase collapse e^(-4*pi*i/3) =
e^(2*pi*i/3) = omega and is never taken on faith: the test suite checks it
numerically against trig_H over random points before anything downstream
uses Q_d.

T_d is the degree-d Chebyshev polynomial rescaled to critical values
{2, 3}: T_d = (t_d + 5)/2 with t_d the classical first-kind polynomial.
"""

from __future__ import annotations

import cmath
import math

from .numfield import OMEGA, OMEGA2
from .poly import MultiPoly

TAU = 2.0 * math.pi


# -- trigonometric evaluators (numeric ground truth) ------------------------

def trig_h(u: float, v: float) -> tuple[complex, complex]:
    """The generalized cosine h(u, v); second component conjugate of first."""
    h1 = cmath.exp(-1j * TAU * u) + cmath.exp(-1j * TAU * v) + cmath.exp(1j * TAU * (u + v))
    return h1, h1.conjugate()


def trig_h_jacobian(u: float, v: float):
    """2x2 complex Jacobian of h at a real point, rows (h1, h2)."""
    a = cmath.exp(-1j * TAU * u)
    b = cmath.exp(-1j * TAU * v)
    c = cmath.exp(1j * TAU * (u + v))
    dh1_du = 1j * TAU * (c - a)
    dh1_dv = 1j * TAU * (c - b)
    return ((dh1_du, dh1_dv), (dh1_du.conjugate(), dh1_dv.conjugate()))


def trig_h_jacobian_det(u: float, v: float) -> float:
    """|det J_h|; vanishes exactly on the sides of the fundamental triangle."""
    (a, b), (ac, bc) = trig_h_jacobian(u, v)
    return abs(a * bc - b * ac)


def trig_H(d: int, u: float, v: float) -> float:
    """Shifted cosine sum whose polynomial form is Q_d."""
    return (
        2.0 * math.cos(TAU * d * u - TAU / 3)
        + 2.0 * math.cos(TAU * d * v - TAU / 3)
        + 2.0 * math.cos(TAU * d * (u + v) + TAU / 3)
    )


def trig_H_grad(d: int, u: float, v: float) -> tuple[float, float]:
    au = TAU * d * u - TAU / 3
    av = TAU * d * v - TAU / 3
    auv = TAU * d * (u + v) + TAU / 3
    s = 2.0 * TAU * d
    return (-s * (math.sin(au) + math.sin(auv)), -s * (math.sin(av) + math.sin(auv)))


def trig_P(d: int, u: float, v: float) -> float:
    """Unshifted cosine sum, the trigonometric form of P_d."""
    return (
        2.0 * math.cos(TAU * d * u)
        + 2.0 * math.cos(TAU * d * v)
        + 2.0 * math.cos(TAU * d * (u + v))
    )


def trig_power_sum(d: int, u: float, v: float) -> complex:
    """d-th power sum of the three unit phases, i.e. h1(d*u, d*v)."""
    return (
        cmath.exp(-1j * TAU * d * u)
        + cmath.exp(-1j * TAU * d * v)
        + cmath.exp(1j * TAU * d * (u + v))
    )


# -- exact polynomial builders ----------------------------------------------

class FoldingCache:
    """Incrementally built table of the power-sum polynomials p_0..p_d."""

    def __init__(self):
        x = MultiPoly.variable(2, 0)
        y = MultiPoly.variable(2, 1)
        self._x = x
        self._y = y
        self._table = [MultiPoly.constant(2, 3), x, x * x - 2 * y]

    def up_to(self, d: int) -> list[MultiPoly]:
        if d < 0:
            raise ValueError("d must be >= 0")
        while len(self._table) <= d:
            k = len(self._table)
            p = self._x * self._table[k - 1] - self._y * self._table[k - 2] + self._table[k - 3]
            self._table.append(p)
        return self._table[: d + 1]

    def get(self, d: int) -> MultiPoly:
        return self.up_to(d)[d]


_CACHE = FoldingCache()


def power_sum(d: int) -> MultiPoly:
    """p_d(x, y): the d-th power sum as a polynomial in (h1, h2)."""
    return _CACHE.get(d)


def folding_P(d: int) -> MultiPoly:
    """P_d = p_d(x, y) + p_d(y, x); symmetric, integer coefficients."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pd = power_sum(d)
    return pd + pd.permute_vars((1, 0))


def folding_Q(d: int) -> MultiPoly:
    """Q_d = omega*p_d(x, y) + omega^2*p_d(y, x); coefficients in Z[omega]."""
    if d < 1:
        raise ValueError("d must be >= 1")
    pd = power_sum(d)
    return OMEGA * pd + OMEGA2 * pd.permute_vars((1, 0))


def chebyshev_T(d: int) -> MultiPoly:
    """T_d(w) = (t_d(w) + 5)/2, with interior critical values exactly {2, 3}."""
    if d < 1:
        raise ValueError("d must be >= 1")
    w = MultiPoly.variable(1, 0)
    t_prev, t = MultiPoly.constant(1, 1), w
    for _ in range(d - 1):
        t_prev, t = t, 2 * w * t - t_prev
    return (t + 5) / 2


def chebyshev_critical(d: int) -> list[tuple[float, int]]:
    """Interior critical points of T_d as (w_k, value) with w_k = cos(k*pi/d).

    Odd k gives value 2 (floor(d/2) points), even k gives value 3
    (floor((d-1)/2) points).
    """
    return [(math.cos(k * math.pi / d), 2 if k % 2 else 3) for k in range(1, d)]
