"""Acceptance battery: every headline claim re-checked from scratch.

Each criterion is a function that raises VerificationError (or ValueError)
on failure and returns a one-line summary on success.  run_all() executes
the battery, prints one PASS/FAIL line per criterion, and supports
deliberate corruption of Q_d (used by the negative control, which demands
that a corrupted build is actually caught).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .critical import (
    brute_force_scan,
    family_enumerate,
    hessian_H,
    image_census,
    value_count_formula,
)
from .errors import VerificationError
from .folding import (
    chebyshev_T,
    chebyshev_critical,
    folding_P,
    folding_Q,
    trig_H,
    trig_P,
    trig_h,
)
from .numfield import SQRT3, Cyclo12
from .poly import MultiPoly
from .surfaces import (
    build_surface,
    count_singular_U,
    count_singular_V,
    enumerate_singular_U,
    enumerate_singular_hyper,
    hypersurface_count,
    hypersurface_excess,
    infinity_check,
    mu_lower_bound,
    real_variant,
)

DEFAULT_DEGREES = (3, 6, 9, 12)
SEED = 20240811


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number:2d} ({self.name}): {self.detail}"


def corrupt_leading(q: MultiPoly, d: int) -> MultiPoly:
    """Bump the x^d coefficient of Q_d by +1 (deliberate defect injection)."""
    return q + MultiPoly.monomial(2, (d, 0), 1)


def _expect(cond: bool, message: str):
    if not cond:
        raise VerificationError(message)


# -- criteria ----------------------------------------------------------------


def check_lemma_census(degrees=DEFAULT_DEGREES) -> str:
    """Criterion 1: brute-force counts per critical value equal closed forms."""
    for d in degrees:
        points = brute_force_scan(d)
        counts = {val: 0 for val in (6, -3, -2)}
        for p in points:
            counts[p.value] += 1
        for val in (6, -3, -2):
            _expect(
                counts[val] == value_count_formula(val, d),
                f"d={d}: {counts[val]} points with value {val}, "
                f"expected {value_count_formula(val, d)}",
            )
        _expect(
            len(points) == (d - 1) ** 2,
            f"d={d}: total {len(points)} != {(d - 1) ** 2}",
        )
    return f"counts match closed forms for d in {tuple(degrees)}"


def check_oracle_identity(
    q_factory: Callable[[int], MultiPoly] = folding_Q,
    degrees=tuple(range(3, 13)),
    n_points: int = 100,
    tol: float = 1e-8,
) -> str:
    """Criterion 2: Q_d(h(u,v)) = H_d(u,v) and P_d(h(u,v)) = cosine sum."""
    rng = random.Random(SEED)
    worst = 0.0
    for d in degrees:
        q = q_factory(d)
        p = folding_P(d)
        for _ in range(n_points):
            u, v = rng.random(), rng.random()
            h1, h2 = trig_h(u, v)
            dq = abs(q.eval((h1, h2)) - trig_H(d, u, v))
            dp = abs(p.eval((h1, h2)) - trig_P(d, u, v))
            worst = max(worst, dq, dp)
            _expect(dq < tol, f"Q oracle failure at d={d}: |Q(h)-H| = {dq:.3e}")
            _expect(dp < tol, f"P oracle failure at d={d}: |P(h)-C| = {dp:.3e}")
    return f"max |poly(h) - trig| = {worst:.2e} over d in {degrees[0]}..{degrees[-1]}"


def check_family_equivalence(degrees=DEFAULT_DEGREES) -> str:
    """Criterion 3: family enumeration = brute-force scan as (i, j) sets."""
    for d in degrees:
        fam = {(p.i, p.j) for p in family_enumerate(d)}
        scan = {(p.i, p.j) for p in brute_force_scan(d)}
        _expect(fam == scan, f"family/brute-force set mismatch at d={d}")
    return f"identical index sets for d in {tuple(degrees)}"


def _fd_hessian(d: int, u: float, v: float, step: float = 1e-5):
    f = trig_H
    huu = (f(d, u + step, v) - 2 * f(d, u, v) + f(d, u - step, v)) / step**2
    hvv = (f(d, u, v + step) - 2 * f(d, u, v) + f(d, u, v - step)) / step**2
    huv = (
        f(d, u + step, v + step)
        - f(d, u + step, v - step)
        - f(d, u - step, v + step)
        + f(d, u - step, v - step)
    ) / (4 * step**2)
    return ((huu, huv), (huv, hvv))


def check_hessian(degrees=DEFAULT_DEGREES, fd_tol: float = 1e-4) -> str:
    """Criterion 4: non-degeneracy, finite-difference match, Morse signature."""
    for d in degrees:
        scale = 2.0 * (2.0 * math.pi) ** 2 * d * d  # 8*pi^2*d^2
        signature = {6: 0, -3: 0, -2: 0}
        for p in brute_force_scan(d):
            u, v = float(p.u), float(p.v)
            hm = hessian_H(d, u, v)
            det = hm[0][0] * hm[1][1] - hm[0][1] * hm[1][0]
            _expect(
                abs(det) >= 0.1 * scale**2,
                f"near-degenerate Hessian at d={d}, ({p.i},{p.j}): det={det:.3e}",
            )
            fd = _fd_hessian(d, u, v)
            for r in range(2):
                for c in range(2):
                    _expect(
                        abs(hm[r][c] - fd[r][c]) <= fd_tol * scale,
                        f"analytic/FD Hessian mismatch at d={d}, ({p.i},{p.j}), "
                        f"entry ({r},{c}): {hm[r][c]:.6e} vs {fd[r][c]:.6e}",
                    )
            if det > 0 and hm[0][0] < 0:
                kind = 6       # local maximum
            elif det > 0:
                kind = -3      # local minimum
            else:
                kind = -2      # saddle
            _expect(
                kind == p.value,
                f"Morse type {kind} != critical value {p.value} at d={d}, "
                f"({p.i},{p.j})",
            )
            signature[kind] += 1
        for val in (6, -3, -2):
            _expect(
                signature[val] == value_count_formula(val, d),
                f"Morse signature census broken at d={d} for value {val}",
            )
    return f"all Hessians certified for d in {tuple(degrees)}"


def check_theorem_counts(
    surface_factory: Callable[[int], MultiPoly] | None = None,
    expected={3: 4, 6: 59, 9: 220},
) -> str:
    """Criterion 5: singular point enumeration with per-point certification."""
    for d, count in expected.items():
        poly = surface_factory(d) if surface_factory is not None else None
        points = enumerate_singular_U(d, surface_poly=poly)
        _expect(
            len(points) == count,
            f"{len(points)} singular points at d={d}, expected {count}",
        )
        _expect(
            count_singular_U(d) == count,
            f"count formula gives {count_singular_U(d)} at d={d}, expected {count}",
        )
        scan_counts = {val: 0 for val in (6, -3, -2)}
        for p in brute_force_scan(d):
            scan_counts[p.value] += 1
        pairing = scan_counts[-2] * (d // 2) + scan_counts[-3] * ((d - 1) // 2)
        _expect(
            pairing == count,
            f"pairing arithmetic gives {pairing} at d={d}, expected {count}",
        )
    return f"verified {expected} with residual and Hessian certification"


def check_excess_law(ns=tuple(range(1, 7))) -> str:
    """Criterion 6: U has floor((3n-1)/2) more singularities than V."""
    for n in ns:
        d = 3 * n
        excess = count_singular_U(d) - count_singular_V(d)
        _expect(
            excess == (d - 1) // 2,
            f"excess {excess} at n={n}, expected {(d - 1) // 2}",
        )
        _expect(
            mu_lower_bound(n) == count_singular_U(d),
            f"mu bound mismatch at n={n}",
        )
    return f"U-V excess equals floor((3n-1)/2) for n in {tuple(ns)}"


def check_distinct_images(degrees=DEFAULT_DEGREES) -> str:
    """Criterion 7: h is injective on the critical set: (d-1)^2 images."""
    for d in degrees:
        census = image_census(brute_force_scan(d), d)
        _expect(
            census.distinct_images == (d - 1) ** 2,
            f"{census.distinct_images} images at d={d}, expected {(d - 1) ** 2}",
        )
    return f"(d-1)^2 distinct images for d in {tuple(degrees)}"


def check_infinity(degrees=(3, 6, 9)) -> str:
    """Criterion 8: top-degree form is the three-term Fermat-type form."""
    for d in degrees:
        _expect(infinity_check(d), f"degree form mismatch at d={d}")
    return f"no singular points at infinity for d in {tuple(degrees)}"


def check_hypersurface() -> str:
    """Criterion 9: 4D counts, enumeration at n=1, excess over the baseline."""
    _expect(hypersurface_count(1) == 10, f"count(1) = {hypersurface_count(1)}")
    _expect(hypersurface_count(2) == 283, f"count(2) = {hypersurface_count(2)}")
    points = enumerate_singular_hyper(1)
    _expect(len(points) == 10, f"enumerated {len(points)} 4D points at n=1")
    for n in (1, 2, 3):
        _expect(
            hypersurface_excess(n) == 3 * n * (n - 1),
            f"excess {hypersurface_excess(n)} at n={n}, expected {3 * n * (n - 1)}",
        )
    return "counts 10 and 283 verified; n=1 enumeration certified"


def _real_variant_closed_form_d3() -> MultiPoly:
    # -X^3 + 3XY^2 - 3*sqrt(3)*X^2 Y + sqrt(3)*Y^3 + 3X^2 + 3Y^2
    #   + 2Z^3 - (3/2)Z - 1/2
    return MultiPoly(
        3,
        {
            (3, 0, 0): Cyclo12(-1),
            (1, 2, 0): Cyclo12(3),
            (2, 1, 0): SQRT3 * (-3),
            (0, 3, 0): SQRT3,
            (2, 0, 0): Cyclo12(3),
            (0, 2, 0): Cyclo12(3),
            (0, 0, 3): Cyclo12(2),
            (0, 0, 1): Cyclo12(Fraction(-3, 2)),
            (0, 0, 0): Cyclo12(Fraction(-1, 2)),
        },
    )


def check_real_variant(degrees=(3, 6, 9), n_points: int = 100,
                       tol: float = 1e-9) -> str:
    """Criterion 10: certified-real coefficients, numeric agreement, d=3 form."""
    rng = random.Random(SEED + 1)
    worst = 0.0
    for d in degrees:
        surface = build_surface(d, "U").poly
        rv = real_variant(d, surface_poly=surface)
        for _ in range(n_points):
            x = rng.uniform(-1, 1)
            y = rng.uniform(-1, 1)
            z = rng.uniform(-1, 1)
            a = surface.eval((complex(x, y), complex(x, -y), complex(z)))
            b = rv.eval((x, y, z))
            worst = max(worst, abs(a - b), abs(b.imag))
            _expect(
                abs(a - b) < tol,
                f"real variant disagrees with complex surface at d={d}: "
                f"|diff| = {abs(a - b):.3e}",
            )
    _expect(
        real_variant(3) == _real_variant_closed_form_d3(),
        "d=3 real variant does not match its closed form",
    )
    return f"real variants certified for d in {tuple(degrees)}; worst diff {worst:.2e}"


# -- the battery ---------------------------------------------------------------


def _negative_control() -> str:
    """Criterion 11: a corrupted Q_6 must fail criteria 2 and 5."""

    def bad_q(d: int) -> MultiPoly:
        q = folding_Q(d)
        return corrupt_leading(q, d) if d == 6 else q

    def bad_surface(d: int) -> MultiPoly:
        return bad_q(d).embed_vars(3, (0, 1)) + chebyshev_T(d).embed_vars(3, (2,))

    try:
        check_oracle_identity(q_factory=bad_q)
        raise VerificationError("corrupted Q_6 slipped past the oracle identity")
    except VerificationError as exc:
        if "slipped" in str(exc):
            raise
    try:
        check_theorem_counts(surface_factory=bad_surface)
        raise VerificationError("corrupted Q_6 slipped past singular enumeration")
    except VerificationError as exc:
        if "slipped" in str(exc):
            raise
    return "corrupting Q_6 by +x^6 is caught by criteria 2 and 5"


def run_all(
    degrees=DEFAULT_DEGREES,
    corrupt_q: int | None = None,
    criteria: tuple[int, ...] | None = None,
    out: Callable[[str], None] | None = print,
) -> list[CriterionResult]:
    """Run the acceptance battery; returns one result per criterion.

    corrupt_q deliberately injects a +x^d defect into Q_d for that degree
    before running (the CLI negative-control path); the self-contained
    negative control (criterion 11) only runs on clean builds.
    """
    degrees = tuple(degrees)
    sdeg = tuple(d for d in degrees if d in (3, 6, 9))

    def q_factory(d: int) -> MultiPoly:
        q = folding_Q(d)
        return corrupt_leading(q, d) if d == corrupt_q else q

    def surface_factory(d: int) -> MultiPoly:
        return q_factory(d).embed_vars(3, (0, 1)) + chebyshev_T(d).embed_vars(3, (2,))

    expected_counts = {d: count_singular_U(d) for d in sdeg}

    battery: list[tuple[int, str, Callable[[], str]]] = [
        (1, "lemma census", lambda: check_lemma_census(degrees)),
        (2, "oracle identity", lambda: check_oracle_identity(q_factory=q_factory)),
        (3, "family equivalence", lambda: check_family_equivalence(degrees)),
        (4, "hessian certification", lambda: check_hessian(degrees)),
        (5, "singular point counts",
         lambda: check_theorem_counts(surface_factory=surface_factory,
                                      expected=expected_counts)),
        (6, "excess law", check_excess_law),
        (7, "distinct images", lambda: check_distinct_images(degrees)),
        (8, "infinity check",
         lambda: check_infinity(tuple(d for d in degrees if d in (3, 6, 9)))),
        (9, "hypersurface", check_hypersurface),
        (10, "real variants",
         lambda: check_real_variant(tuple(d for d in degrees if d in (3, 6, 9)))),
    ]
    if corrupt_q is None:
        battery.append((11, "negative control", _negative_control))

    results = []
    for number, name, fn in battery:
        if criteria is not None and number not in criteria:
            continue
        try:
            detail = fn()
            result = CriterionResult(number, name, True, detail)
        except (VerificationError, ValueError, AssertionError) as exc:
            result = CriterionResult(number, name, False, str(exc))
        if out is not None:
            out(result.line())
        results.append(result)
    return results
