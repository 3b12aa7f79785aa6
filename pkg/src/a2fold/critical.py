"""Critical points of the shifted cosine sum inside the fundamental triangle.

Every critical point of trig_H(d) lies on the fine lattice with spacing
1/(6d).  The scan walks that lattice over the triangle with interior
u - v > 0, u + 2v > 0, 2u + v < 1 (exact integer tests on the lattice
indices), detects vanishing gradients numerically, and classifies the
critical value, family tag, Hessian data and image under the generalized
cosine h.  Family tags are keyed by the residues (i mod 6, j mod 6) of the
lattice indices; the table below was derived from the scan at d = 6 by
matching brute-force counts to the closed-form family sizes, and the scan
hard-errors if any retained point ever falls outside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import VerificationError
from .folding import TAU, trig_H, trig_H_grad, trig_h

# family tag and critical value by lattice residue (i mod 6, j mod 6)
FAMILY_BY_RESIDUE = {
    (2, 2): "a",
    (0, 0): "b1",
    (4, 4): "b2",
    (5, 2): "c1",
    (5, 5): "c1",
    (2, 5): "c2",
}

FAMILY_VALUE = {"a": 6, "b1": -3, "b2": -3, "c1": -2, "c2": -2}

FAMILY_ORDER = ("a", "b1", "b2", "c1", "c2")

CRITICAL_VALUES = (6, -3, -2)


def family_count_formula(tag: str, d: int) -> int:
    """Closed-form family size for d divisible by 3 (exact integers)."""
    if d % 3 or d < 3:
        raise ValueError("closed forms require d >= 3 divisible by 3")
    if tag == "a":
        return d * (d - 3) // 6
    if tag == "b1":
        return 1 + d * (d - 3) // 6
    if tag == "b2":
        return d * (d - 3) // 6
    if tag == "c1":
        return d * (d - 1) // 3
    if tag == "c2":
        return d * (d - 1) // 6
    raise ValueError(f"unknown family tag {tag!r}")


def value_count_formula(value: int, d: int) -> int:
    """Closed-form number of critical points with the given critical value."""
    if value == 6:
        return d * (d - 3) // 6
    if value == -3:
        return d * d // 3 - d + 1
    if value == -2:
        return d * (d - 1) // 2
    raise ValueError(f"{value} is not a critical value")


def interior_indices(i: int, j: int, d: int) -> bool:
    """Exact interior test for the lattice point (i/(6d), j/(6d))."""
    return i > j and i + 2 * j > 0 and 2 * i + j < 6 * d


def interior_point(u: Fraction, v: Fraction) -> bool:
    """Exact interior test for a rational point of the triangle."""
    return u - v > 0 and u + 2 * v > 0 and 2 * u + v < 1


@dataclass(frozen=True)
class CriticalPoint:
    i: int
    j: int
    u: Fraction
    v: Fraction
    value: int
    family: str
    hessian_det: float
    image_x: complex
    image_y: complex


@dataclass(frozen=True)
class FamilyCount:
    tag: str
    value: int
    count_formula: int
    count_bruteforce: int


@dataclass(frozen=True)
class FamilyCensus:
    d: int
    families: tuple[FamilyCount, ...]
    value_totals: dict[int, int]
    total: int
    distinct_images: int

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "families": [
                {
                    "tag": f.tag,
                    "value": f.value,
                    "count_formula": f.count_formula,
                    "count_bruteforce": f.count_bruteforce,
                }
                for f in self.families
            ],
            "total": self.total,
            "distinct_images": self.distinct_images,
        }


def hessian_H(d: int, u: float, v: float):
    """Analytic 2x2 Hessian of trig_H at (u, v).

    Diagonal entries are -8*pi^2*d^2*(cos_u + cos_uv) and
    -8*pi^2*d^2*(cos_v + cos_uv); both off-diagonal entries are
    -8*pi^2*d^2*cos_uv.  (Direct differentiation of the cosine sum; the
    tests cross-check every entry against finite differences.)
    """
    s = 2.0 * TAU * TAU * d * d  # 8*pi^2*d^2
    cu = math.cos(TAU * d * u - TAU / 3)
    cv = math.cos(TAU * d * v - TAU / 3)
    cuv = math.cos(TAU * d * (u + v) + TAU / 3)
    return ((-s * (cu + cuv), -s * cuv), (-s * cuv, -s * (cv + cuv)))


def _make_point(d: int, i: int, j: int, tol_value: float) -> CriticalPoint:
    u = Fraction(i, 6 * d)
    v = Fraction(j, 6 * d)
    uf, vf = float(u), float(v)
    val = trig_H(d, uf, vf)
    nearest = min(CRITICAL_VALUES, key=lambda c: abs(val - c))
    if abs(val - nearest) > tol_value:
        raise VerificationError(
            f"critical value {val} at lattice ({i},{j}), d={d} "
            f"is not within {tol_value} of {CRITICAL_VALUES}"
        )
    fam = FAMILY_BY_RESIDUE.get((i % 6, j % 6))
    if fam is None or FAMILY_VALUE[fam] != nearest:
        raise VerificationError(
            f"lattice residue ({i % 6},{j % 6}) with value {nearest} "
            f"does not match the family table"
        )
    hm = hessian_H(d, uf, vf)
    det = hm[0][0] * hm[1][1] - hm[0][1] * hm[1][0]
    hx, hy = trig_h(uf, vf)
    return CriticalPoint(
        i=i, j=j, u=u, v=v, value=nearest, family=fam,
        hessian_det=det, image_x=hx, image_y=hy,
    )


def brute_force_scan(d: int, tol_grad: float | None = None,
                     tol_value: float = 1e-8) -> list[CriticalPoint]:
    """All critical points interior to the triangle, by lattice scan.

    Retains lattice points where both gradient components of trig_H are
    below tol_grad (default 1e-7*d; the gradient scale is 4*pi*d, and
    non-critical lattice points sit at least 2*sqrt(3)*pi*d away from zero,
    so the threshold has orders of magnitude of slack on both sides).
    """
    if d < 3 or d % 3:
        raise ValueError("scan requires d >= 3 divisible by 3")
    if tol_grad is None:
        tol_grad = 1e-7 * d
    points = []
    for i in range(1, 4 * d):
        for j in range(-2 * d + 1, 2 * d):
            if not interior_indices(i, j, d):
                continue
            gu, gv = trig_H_grad(d, i / (6 * d), j / (6 * d))
            if abs(gu) >= tol_grad or abs(gv) >= tol_grad:
                continue
            points.append(_make_point(d, i, j, tol_value))
    return points


def family_enumerate(d: int, tol_value: float = 1e-8) -> list[CriticalPoint]:
    """Generate critical points family by family from the residue classes.

    Must reproduce brute_force_scan(d) exactly; any discrepancy is a hard
    error (the scan is the ground truth, the families are the closed form).
    """
    if d < 3 or d % 3:
        raise ValueError("family enumeration requires d >= 3 divisible by 3")
    points = []
    for (ri, rj), _fam in FAMILY_BY_RESIDUE.items():
        i0 = ri if ri >= 1 else 6
        j_low = -2 * d + 1
        j0 = j_low + (rj - j_low) % 6
        for i in range(i0, 4 * d, 6):
            for j in range(j0, 2 * d, 6):
                if interior_indices(i, j, d):
                    points.append(_make_point(d, i, j, tol_value))
    points.sort(key=lambda p: (p.i, p.j))
    scan = brute_force_scan(d, tol_value=tol_value)
    if [(p.i, p.j) for p in points] != [(p.i, p.j) for p in scan]:
        raise VerificationError(
            f"family enumeration disagrees with brute-force scan at d={d}"
        )
    return points


def image_census(points: list[CriticalPoint], d: int,
                 dedup_tol: float = 1e-6) -> FamilyCensus:
    """Census of the critical set and of its image under h.

    Asserts that h is injective on the interior critical set: the number of
    distinct images must equal (d-1)^2 exactly.
    """
    by_family: dict[str, int] = {tag: 0 for tag in FAMILY_ORDER}
    by_value: dict[int, int] = {val: 0 for val in CRITICAL_VALUES}
    for p in points:
        by_family[p.family] += 1
        by_value[p.value] += 1

    kept: list[tuple[complex, complex]] = []
    for p in points:
        for qx, qy in kept:
            if abs(p.image_x - qx) ** 2 + abs(p.image_y - qy) ** 2 < dedup_tol ** 2:
                raise VerificationError(
                    f"duplicate critical image near ({qx}, {qy}) at d={d}"
                )
        kept.append((p.image_x, p.image_y))
    distinct = len(kept)
    expected = (d - 1) ** 2
    if distinct != expected:
        raise VerificationError(
            f"{distinct} distinct critical images at d={d}, expected {expected}"
        )

    families = tuple(
        FamilyCount(
            tag=tag,
            value=FAMILY_VALUE[tag],
            count_formula=family_count_formula(tag, d),
            count_bruteforce=by_family[tag],
        )
        for tag in FAMILY_ORDER
    )
    return FamilyCensus(
        d=d,
        families=families,
        value_totals=by_value,
        total=len(points),
        distinct_images=distinct,
    )
