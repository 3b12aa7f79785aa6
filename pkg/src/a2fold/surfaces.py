"""Nodal surfaces, hypersurfaces, real variants, and their singular points.

The degree-d surface U_d is Q_d(x, y) + T_d(w) = 0 (d divisible by 3); V_d
is the comparison surface P_d(x, y) + T_d(w) = 0 with the same shifted
Chebyshev summand.  Singular points are not found by solving polynomial
systems: the product structure pairs every critical image of Q_d having
value -2 or -3 with the Chebyshev critical points of opposite value, and
each candidate is then certified numerically (residuals of the polynomial
and its gradient, non-vanishing 3x3 Hessian determinant).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .critical import CriticalPoint, brute_force_scan, value_count_formula
from .errors import VerificationError
from .folding import chebyshev_T, chebyshev_critical, folding_P, folding_Q
from .numfield import I, OMEGA, OMEGA2, Cyclo12
from .poly import MultiPoly

RESIDUAL_TOL = 1e-8   # |F| and |grad F|, relative to the coefficient scale
HESSIAN_TOL = 1e-4    # |det Hess| lower bound, relative to scale^arity


@dataclass(frozen=True)
class SurfaceSpec:
    d: int
    kind: str
    poly: MultiPoly


@dataclass(frozen=True)
class SingularPoint:
    x: complex
    y: complex
    w: complex
    q_value: int
    t_value: int
    residual_f: float
    residual_grad: float
    hess_det_abs: float


@dataclass(frozen=True)
class HypersurfaceSpec:
    n: int
    poly: MultiPoly


@dataclass(frozen=True)
class HyperSingularPoint:
    coords: tuple[complex, complex, complex, complex]
    value: int
    residual_f: float
    residual_grad: float
    hess_det_abs: float


@dataclass(frozen=True)
class RealNode:
    x: float
    y: float
    z: float
    residual_f: float
    residual_grad: float
    hess_det_abs: float


def _det(m) -> complex:
    """Determinant of a small complex matrix (Gaussian elimination)."""
    a = [list(row) for row in m]
    n = len(a)
    det = 1 + 0j
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[piv][col] == 0:
            return 0j
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for cc in range(col + 1, n):
                a[r][cc] -= f * a[col][cc]
    return det


# -- construction ------------------------------------------------------------


def build_surface(d: int, kind: str) -> SurfaceSpec:
    """Assemble the trivariate surface polynomial Q_d + T_d or P_d + T_d."""
    if kind not in ("U", "V"):
        raise ValueError(f"kind must be 'U' or 'V', got {kind!r}")
    if d < 3:
        raise ValueError("surface degree must be >= 3")
    if kind == "U" and d % 3:
        raise ValueError("U surfaces require d divisible by 3")
    q = folding_Q(d) if kind == "U" else folding_P(d)
    f = q.embed_vars(3, (0, 1)) + chebyshev_T(d).embed_vars(3, (2,))
    return SurfaceSpec(d=d, kind=kind, poly=f)


def hypersurface_build(n: int) -> HypersurfaceSpec:
    """The degree-3n hypersurface polynomial Q(x, y) - Q(w, t) in 4 variables."""
    if n < 1:
        raise ValueError("n must be >= 1")
    q = folding_Q(3 * n)
    g = q.embed_vars(4, (0, 1)) - q.embed_vars(4, (2, 3))
    return HypersurfaceSpec(n=n, poly=g)


def real_variant(d: int, surface_poly: MultiPoly | None = None) -> MultiPoly:
    """Real form of U_d under x -> X + iY, y -> X - iY, w -> Z.

    Every coefficient of the result is certified real (it then lies in
    Q(sqrt(3)) inside the working field); a non-real coefficient is a hard
    error.
    """
    if d < 3 or d % 3:
        raise ValueError("real variants require d >= 3 divisible by 3")
    f = surface_poly if surface_poly is not None else build_surface(d, "U").poly
    X = MultiPoly.variable(3, 0)
    Y = MultiPoly.variable(3, 1)
    Z = MultiPoly.variable(3, 2)
    out = f.substitute([X + I * Y, X - I * Y, Z])
    for exps, coeff in out.terms.items():
        if not coeff.is_real():
            raise VerificationError(
                f"non-real coefficient {coeff!r} at exponents {exps} in real variant"
            )
    return out


# -- count formulas ------------------------------------------------------------


def count_singular_U(d: int) -> int:
    """binom(d,2)*floor(d/2) + (d^2/3 - d + 1)*floor((d-1)/2), exact."""
    if d < 3 or d % 3:
        raise ValueError("count requires d >= 3 divisible by 3")
    return math.comb(d, 2) * (d // 2) + (d * d // 3 - d + 1) * ((d - 1) // 2)


def count_singular_V(d: int) -> int:
    """Singularity count of the comparison surface V_d, exact."""
    if d < 3 or d % 3:
        raise ValueError("count requires d >= 3 divisible by 3")
    return math.comb(d, 2) * (d // 2) + (d * d // 3 - d) * ((d - 1) // 2)


def mu_lower_bound(n: int) -> int:
    """Lower bound for the max node count in degree 3n; equals count_singular_U(3n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return count_singular_U(3 * n)


def hypersurface_count(n: int) -> int:
    """Number of non-degenerate singularities of the 4D hypersurface."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 3 * n
    return (
        value_count_formula(-2, d) ** 2
        + value_count_formula(-3, d) ** 2
        + value_count_formula(6, d) ** 2
    )


def hypersurface_count_chmutov(n: int) -> int:
    """Same pairing count for the unshifted (P_d) hypersurface baseline.

    P_d has binom(d,2) critical points with value -2, d^2/3 - d with value
    -3, and the remaining d(d-3)/6 + 1 of the (d-1)^2 with value 6.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 3 * n
    n2 = math.comb(d, 2)
    n3 = d * d // 3 - d
    n6 = (d - 1) ** 2 - n2 - n3
    return n2 ** 2 + n3 ** 2 + n6 ** 2


def hypersurface_excess(n: int) -> int:
    """Extra singularities over the baseline hypersurface; equals 3n(n-1)."""
    return hypersurface_count(n) - hypersurface_count_chmutov(n)


# -- singular point enumeration and certification ------------------------------


def _eval_residuals(f: MultiPoly, grads: list[MultiPoly], hess, point):
    fv = abs(f.eval(point))
    gv = math.sqrt(sum(abs(g.eval(point)) ** 2 for g in grads))
    hv = abs(_det([[h.eval(point) for h in row] for row in hess]))
    return fv, gv, hv


def enumerate_singular_U(
    d: int,
    surface_poly: MultiPoly | None = None,
    critical_points: list[CriticalPoint] | None = None,
) -> list[SingularPoint]:
    """All singular points of U_d by pairing, each certified numerically.

    Pairs every value-(-2) critical image of Q_d with the Chebyshev critical
    points of value 2 (odd k), and every value-(-3) image with value 3 (even
    k).  Certification thresholds are relative to the max embedded
    coefficient magnitude of the surface polynomial; any failure, or a total
    that differs from the closed-form count, is a hard error.
    """
    if d < 3 or d % 3:
        raise ValueError("singular enumeration requires d >= 3 divisible by 3")
    f = surface_poly if surface_poly is not None else build_surface(d, "U").poly
    if critical_points is None:
        critical_points = brute_force_scan(d)

    scale = f.coeff_scale()
    res_tol = RESIDUAL_TOL * scale
    det_tol = HESSIAN_TOL * scale ** 3

    fx, fy, fw = f.partial(0), f.partial(1), f.partial(2)
    grads = [fx, fy, fw]
    hess = [
        [fx.partial(0), fx.partial(1), fx.partial(2)],
        [fy.partial(0), fy.partial(1), fy.partial(2)],
        [fw.partial(0), fw.partial(1), fw.partial(2)],
    ]
    cheb = chebyshev_critical(d)

    out = []
    for p in critical_points:
        if p.value not in (-2, -3):
            continue
        for wk, tval in cheb:
            if p.value + tval != 0:
                continue
            point = (p.image_x, p.image_y, complex(wk))
            fv, gv, hv = _eval_residuals(f, grads, hess, point)
            if fv >= res_tol or gv >= res_tol:
                raise VerificationError(
                    f"singular point residual failure at d={d}, "
                    f"lattice ({p.i},{p.j}), w={wk}: |F|={fv:.3e}, "
                    f"|grad|={gv:.3e}, tol={res_tol:.3e}"
                )
            if hv < det_tol:
                raise VerificationError(
                    f"degenerate Hessian at d={d}, lattice ({p.i},{p.j}), "
                    f"w={wk}: |det|={hv:.3e} < {det_tol:.3e}"
                )
            out.append(
                SingularPoint(
                    x=p.image_x, y=p.image_y, w=complex(wk),
                    q_value=p.value, t_value=tval,
                    residual_f=fv, residual_grad=gv, hess_det_abs=hv,
                )
            )
    expected = count_singular_U(d)
    if len(out) != expected:
        raise VerificationError(
            f"enumerated {len(out)} singular points at d={d}, expected {expected}"
        )
    return out


def enumerate_singular_hyper(n: int) -> list[HyperSingularPoint]:
    """Singular points of the 4D hypersurface: pairs of equal-value images.

    Ordered pairs (with repetition) of critical images sharing one critical
    value; each candidate is certified like the 3D case, with the Hessian
    bound relative to scale^4.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = 3 * n
    if d > 9:
        raise ValueError("hypersurface enumeration is guarded to 3n <= 9")
    g = hypersurface_build(n).poly
    scale = g.coeff_scale()
    res_tol = RESIDUAL_TOL * scale
    det_tol = HESSIAN_TOL * scale ** 4

    grads = [g.partial(k) for k in range(4)]
    hess = [[grads[r].partial(c) for c in range(4)] for r in range(4)]

    points = brute_force_scan(d)
    out = []
    for p in points:
        for q in points:
            if p.value != q.value:
                continue
            point = (p.image_x, p.image_y, q.image_x, q.image_y)
            fv, gv, hv = _eval_residuals(g, grads, hess, point)
            if fv >= res_tol or gv >= res_tol:
                raise VerificationError(
                    f"hypersurface residual failure at n={n}, lattice "
                    f"({p.i},{p.j})x({q.i},{q.j}): |F|={fv:.3e}, |grad|={gv:.3e}"
                )
            if hv < det_tol:
                raise VerificationError(
                    f"degenerate 4D Hessian at n={n}, lattice "
                    f"({p.i},{p.j})x({q.i},{q.j}): |det|={hv:.3e} < {det_tol:.3e}"
                )
            out.append(
                HyperSingularPoint(
                    coords=point, value=p.value,
                    residual_f=fv, residual_grad=gv, hess_det_abs=hv,
                )
            )
    expected = hypersurface_count(n)
    if len(out) != expected:
        raise VerificationError(
            f"enumerated {len(out)} hypersurface singularities at n={n}, "
            f"expected {expected}"
        )
    return out


def detect_real_nodes(d: int, tol: float = 1e-8) -> list[RealNode]:
    """Real nodes of the real variant of U_d, detected numerically.

    Every singular point of U_d has second coordinate conjugate to the
    first and real third coordinate, so it maps to the real point
    (Re x, Im x, w) of the real variant.  Each image is re-checked against
    the real polynomial, its gradient and its Hessian; points that pass are
    returned.  The count is reporting only, never a certified claim.
    """
    points = enumerate_singular_U(d)
    rv = real_variant(d)
    scale = rv.coeff_scale()
    grads = [rv.partial(k) for k in range(3)]
    hess = [[grads[r].partial(c) for c in range(3)] for r in range(3)]
    out = []
    for p in points:
        pt = (complex(p.x.real), complex(p.x.imag), complex(p.w.real))
        fv, gv, hv = _eval_residuals(rv, grads, hess, pt)
        if fv < tol * scale and gv < tol * scale and hv > 0:
            out.append(
                RealNode(
                    x=p.x.real, y=p.x.imag, z=p.w.real,
                    residual_f=fv, residual_grad=gv, hess_det_abs=hv,
                )
            )
    return out


# -- behaviour at infinity ------------------------------------------------------


def expected_degree_form(d: int) -> MultiPoly:
    """omega*x^d + omega^2*y^d + 2^(d-2)*w^d (three Fermat-type terms)."""
    lead = Cyclo12(Fraction(2) ** (d - 2))
    return MultiPoly(
        3,
        {
            (d, 0, 0): OMEGA,
            (0, d, 0): OMEGA2,
            (0, 0, d): lead,
        },
    )


def infinity_check(d: int, surface_poly: MultiPoly | None = None) -> bool:
    """True iff the top-degree form of U_d is the expected Fermat-type form.

    Such a form defines a smooth plane curve, so the projective closure has
    no singular points at infinity.  A mismatch returns False with a
    diagnostic warning naming the offending form.
    """
    if d < 3 or d % 3:
        raise ValueError("infinity check requires d >= 3 divisible by 3")
    f = surface_poly if surface_poly is not None else build_surface(d, "U").poly
    form = f.degree_form()
    expected = expected_degree_form(d)
    if form != expected:
        warnings.warn(
            f"degree form at d={d} is {form}, expected {expected}; "
            "singular points at infinity are possible"
        )
        return False
    return True


# -- reports -------------------------------------------------------------------


def _sci6(x: float) -> float:
    """Round to 6 significant digits for stable report serialization."""
    return float(f"{x:.5e}")


def singular_report(d: int, points: list[SingularPoint]) -> dict:
    """JSON-ready singularity report for U_d."""
    return {
        "d": d,
        "kind": "U",
        "count_formula": count_singular_U(d),
        "count_enumerated": len(points),
        "points": [
            {
                "x": [_sci6(p.x.real), _sci6(p.x.imag)],
                "y": [_sci6(p.y.real), _sci6(p.y.imag)],
                "w": [_sci6(p.w.real), _sci6(p.w.imag)],
                "q_value": p.q_value,
                "t_value": p.t_value,
                "residual_f": _sci6(p.residual_f),
                "residual_grad": _sci6(p.residual_grad),
                "hess_det_abs": _sci6(p.hess_det_abs),
            }
            for p in points
        ],
    }


def real_variant_report(d: int) -> dict:
    """JSON-ready report on the real variant and its detected real nodes."""
    nodes = detect_real_nodes(d)
    return {
        "d": d,
        "complex_singular_count": count_singular_U(d),
        "real_nodes_detected": len(nodes),
        "nodes": [
            {
                "point": [_sci6(node.x), _sci6(node.y), _sci6(node.z)],
                "residual_f": _sci6(node.residual_f),
                "residual_grad": _sci6(node.residual_grad),
                "hess_det_abs": _sci6(node.hess_det_abs),
            }
            for node in nodes
        ],
    }


def hyper_report(n: int, count_enumerated: int | None = None) -> dict:
    """JSON-ready count report for the 4D hypersurface."""
    d = 3 * n
    report = {
        "n": n,
        "d": d,
        "count_formula": hypersurface_count(n),
        "by_value": {
            "-2": value_count_formula(-2, d) ** 2,
            "-3": value_count_formula(-3, d) ** 2,
            "6": value_count_formula(6, d) ** 2,
        },
        "count_baseline": hypersurface_count_chmutov(n),
        "excess_over_baseline": hypersurface_excess(n),
    }
    if count_enumerated is not None:
        report["count_enumerated"] = count_enumerated
    return report
