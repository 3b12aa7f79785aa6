"""Exact arithmetic in the cyclotomic field Q(zeta_12).

zeta denotes a fixed primitive 12th root of unity, embedded numerically as
exp(i*pi/6).  Its minimal polynomial is zeta^4 - zeta^2 + 1, so elements are
stored on the basis {1, zeta, zeta^2, zeta^3} with exact rational
coordinates.  This single degree-4 field contains every constant the
constructions need: the primitive cube roots of unity omega = zeta^2 - 1 and
omega^2 = -zeta^2, the imaginary unit i = zeta^3, sqrt(3) = 2*zeta - zeta^3,
and all rationals.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

Rational = Fraction

# zeta^k on the basis {1, zeta, zeta^2, zeta^3}, k = 0..11, reduced via
# zeta^4 = zeta^2 - 1 (equivalently zeta^6 = -1).
_ZETA_POW = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)

_ZETA_NUMERIC = cmath.exp(1j * math.pi / 6)
_BASIS_NUMERIC = tuple(_ZETA_NUMERIC ** k for k in range(4))


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class Cyclo12:
    """An element c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 of Q(zeta_12).

    Values are immutable; all arithmetic is exact and returns new elements
    in the canonical reduced basis.
    """

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        object.__setattr__(
            self,
            "c",
            (_as_fraction(c0), _as_fraction(c1), _as_fraction(c2), _as_fraction(c3)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo12 is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclo12):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo12(other)
        return None

    # -- ring / field operations ------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo12(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo12(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclo12(*(-a for a in self.c))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                if not b:
                    continue
                ab = a * b
                for k, e in enumerate(_ZETA_POW[i + j]):
                    if e:
                        out[k] += e * ab
        return Cyclo12(*out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Cyclo12(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, k: int) -> Cyclo12:
        """Apply the field automorphism zeta -> zeta^k (k coprime to 12)."""
        out = [Fraction(0)] * 4
        for m, a in enumerate(self.c):
            if not a:
                continue
            for t, e in enumerate(_ZETA_POW[(m * k) % 12]):
                if e:
                    out[t] += e * a
        return Cyclo12(*out)

    def conj(self) -> Cyclo12:
        """Complex conjugation, i.e. the automorphism zeta -> zeta^-1."""
        return self.galois(11)

    def inverse(self) -> Cyclo12:
        """Exact multiplicative inverse via the product of Galois conjugates.

        a^-1 = sigma5(a)*sigma7(a)*sigma11(a) / N(a), where the field norm
        N(a) = a * sigma5(a) * sigma7(a) * sigma11(a) is rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        cof = self.galois(5) * self.galois(7) * self.galois(11)
        norm = self * cof
        if norm.c[1] or norm.c[2] or norm.c[3]:
            raise ArithmeticError("field norm not rational; reduction broken")
        return Cyclo12(*(a / norm.c[0] for a in cof.c))

    # -- predicates and numeric bridge ------------------------------------

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not (self.c[1] or self.c[2] or self.c[3])

    def is_real(self) -> bool:
        return self == self.conj()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def sqrt3_parts(self) -> tuple[Fraction, Fraction]:
        """Write a real element as a + b*sqrt(3); raises if not real."""
        if not self.is_real():
            raise ValueError(f"{self!r} is not real")
        # real subfield is spanned by 1 and sqrt(3) = 2*zeta - zeta^3,
        # so c1 = -2*c3 and the sqrt(3) coordinate is -c3
        return self.c[0], -self.c[3]

    def embed(self) -> complex:
        """Numeric value with zeta = exp(i*pi/6)."""
        z = 0j
        for a, b in zip(self.c, _BASIS_NUMERIC):
            if a:
                z += float(a) * b
        return z

    # -- equality, hashing, text ------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def tokens(self) -> str:
        """The four basis rationals as the textual form 'a0 a1 a2 a3'."""
        return " ".join(str(a) for a in self.c)

    @classmethod
    def from_tokens(cls, parts) -> Cyclo12:
        parts = list(parts)
        if len(parts) != 4:
            raise ValueError(f"expected 4 rational tokens, got {len(parts)}")
        return cls(*(Fraction(p) for p in parts))

    def __repr__(self):
        return f"Cyclo12({', '.join(str(a) for a in self.c)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mon = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k == 0:
                parts.append(str(a))
            elif a == 1:
                parts.append(mon)
            elif a == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{a}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Cyclo12()
ONE = Cyclo12(1)
OMEGA = Cyclo12(-1, 0, 1, 0)   # e^(2*pi*i/3) = zeta^4
OMEGA2 = Cyclo12(0, 0, -1, 0)  # e^(-2*pi*i/3) = zeta^8
I = Cyclo12(0, 0, 0, 1)        # zeta^3
SQRT3 = Cyclo12(0, 2, 0, -1)   # zeta + zeta^-1
