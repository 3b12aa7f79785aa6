"""Sparse multivariate polynomials over Q(zeta_12).

A polynomial is a map from exponent tuples (length = arity, 1 to 4
variables) to nonzero Cyclo12 coefficients.  Arithmetic, differentiation
and substitution are exact; only eval() goes through floating point.
Serialization uses graded lexicographic term order (highest total degree
first, ties broken by descending exponent tuple) so emitted files are
byte-stable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .numfield import Cyclo12, ONE

DEFAULT_VAR_NAMES = {
    1: ("w",),
    2: ("x", "y"),
    3: ("x", "y", "w"),
    4: ("x", "y", "w", "t"),
}


def _grlex_key(exps):
    return (-sum(exps), tuple(-e for e in exps))


class MultiPoly:
    """Sparse polynomial in `arity` variables with Cyclo12 coefficients."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        if not 1 <= arity <= 4:
            raise ValueError(f"arity must be in 1..4, got {arity}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity or any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for arity {arity}")
            if not isinstance(coeff, Cyclo12):
                coeff = Cyclo12(coeff)
            if coeff:
                clean[exps] = clean.get(exps, Cyclo12()) + coeff
                if not clean[exps]:
                    del clean[exps]
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> MultiPoly:
        return cls(arity, {})

    @classmethod
    def constant(cls, arity: int, value) -> MultiPoly:
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, arity: int, index: int) -> MultiPoly:
        if not 0 <= index < arity:
            raise ValueError(f"variable index {index} out of range for arity {arity}")
        exps = tuple(1 if k == index else 0 for k in range(arity))
        return cls(arity, {exps: ONE})

    @classmethod
    def monomial(cls, arity: int, exps, coeff) -> MultiPoly:
        return cls(arity, {tuple(exps): coeff})

    # -- ring operations -----------------------------------------------------

    def _check_arity(self, other: MultiPoly):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    @staticmethod
    def _as_scalar(value):
        if isinstance(value, Cyclo12):
            return value
        if isinstance(value, (int, Fraction)):
            return Cyclo12(value)
        return None

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            s = self._as_scalar(other)
            if s is None:
                return NotImplemented
            other = MultiPoly.constant(self.arity, s)
        self._check_arity(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[exps] = acc
            elif exps in out:
                del out[exps]
        return MultiPoly(self.arity, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            return self + (-other)
        s = self._as_scalar(other)
        if s is None:
            return NotImplemented
        return self + (-s)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            s = self._as_scalar(other)
            if s is None:
                return NotImplemented
            return self.scale(s)
        self._check_arity(other)
        out: dict[tuple, Cyclo12] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc = out.get(e)
                acc = c if acc is None else acc + c
                if acc:
                    out[e] = acc
                elif e in out:
                    del out[e]
        return MultiPoly(self.arity, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = self._as_scalar(other)
        if s is None:
            return NotImplemented
        return self.scale(s.inverse())

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value) -> MultiPoly:
        s = self._as_scalar(value)
        return MultiPoly(self.arity, {e: c * s for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- calculus ------------------------------------------------------------

    def degree(self) -> int:
        """Max total degree; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def partial(self, var_index: int) -> MultiPoly:
        """Formal partial derivative with respect to one variable."""
        if not 0 <= var_index < self.arity:
            raise ValueError(f"variable index {var_index} out of range")
        out = {}
        for exps, coeff in self.terms.items():
            k = exps[var_index]
            if k == 0:
                continue
            e = tuple(v - 1 if idx == var_index else v for idx, v in enumerate(exps))
            c = coeff * k
            acc = out.get(e)
            out[e] = c if acc is None else acc + c
        return MultiPoly(self.arity, out)

    def eval(self, point: Sequence[complex]) -> complex:
        """Numeric evaluation; coefficients embedded once per term."""
        if len(point) != self.arity:
            raise ValueError(f"point length {len(point)} != arity {self.arity}")
        total = 0j
        for exps, coeff in self.terms.items():
            term = coeff.embed()
            for z, e in zip(point, exps):
                if e:
                    term *= z ** e
            total += term
        return total

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Exact composition: replace variable k by images[k]."""
        if len(images) != self.arity:
            raise ValueError(f"need {self.arity} images, got {len(images)}")
        ar = images[0].arity
        if any(img.arity != ar for img in images):
            raise ValueError("images must share one arity")
        max_exp = [0] * self.arity
        for exps in self.terms:
            for k, e in enumerate(exps):
                max_exp[k] = max(max_exp[k], e)
        pows = []
        for k, img in enumerate(images):
            table = [MultiPoly.constant(ar, 1)]
            for _ in range(max_exp[k]):
                table.append(table[-1] * img)
            pows.append(table)
        acc = MultiPoly.zero(ar)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(ar, coeff)
            for k, e in enumerate(exps):
                if e:
                    term = term * pows[k][e]
            acc = acc + term
        return acc

    def permute_vars(self, perm: Sequence[int]) -> MultiPoly:
        """Relabel variables: new exponent of position perm[k] is old var k."""
        if sorted(perm) != list(range(self.arity)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.arity - 1}")
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * self.arity
            for k, v in enumerate(exps):
                e[perm[k]] = v
            out[tuple(e)] = coeff
        return MultiPoly(self.arity, out)

    def embed_vars(self, new_arity: int, positions: Sequence[int]) -> MultiPoly:
        """View the polynomial in a larger variable set; var k -> positions[k]."""
        if len(positions) != self.arity:
            raise ValueError("need one target position per variable")
        if len(set(positions)) != len(positions) or any(
            not 0 <= p < new_arity for p in positions
        ):
            raise ValueError(f"bad positions {positions} for arity {new_arity}")
        out = {}
        for exps, coeff in self.terms.items():
            e = [0] * new_arity
            for k, v in enumerate(exps):
                e[positions[k]] = v
            out[tuple(e)] = coeff
        return MultiPoly(new_arity, out)

    def degree_form(self) -> MultiPoly:
        """Top-degree homogeneous part (decides behaviour at infinity)."""
        if not self.terms:
            raise ValueError("degree form of the zero polynomial is undefined")
        d = self.degree()
        return MultiPoly(self.arity, {e: c for e, c in self.terms.items() if sum(e) == d})

    def conj_coeffs(self) -> MultiPoly:
        """Apply complex conjugation to every coefficient."""
        return MultiPoly(self.arity, {e: c.conj() for e, c in self.terms.items()})

    # -- inspection and text form ---------------------------------------------

    def items_grlex(self) -> list[tuple[tuple, Cyclo12]]:
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def coeff_scale(self) -> float:
        """Max embedded coefficient magnitude (tolerance scale)."""
        if not self.terms:
            return 0.0
        return max(abs(c.embed()) for c in self.terms.values())

    def __repr__(self):
        return f"MultiPoly(arity={self.arity}, terms={len(self.terms)}, deg={self.degree()})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = DEFAULT_VAR_NAMES[self.arity]
        parts = []
        for exps, coeff in self.items_grlex():
            mono = "*".join(
                f"{names[k]}^{e}" if e > 1 else names[k]
                for k, e in enumerate(exps)
                if e
            )
            cs = str(coeff)
            if "+" in cs or "-" in cs[1:] or " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)


def poly_to_text(p: MultiPoly, names: Iterable[str] | None = None) -> str:
    """Polynomial text format: header then one graded-lex term per line."""
    names = tuple(names) if names is not None else DEFAULT_VAR_NAMES[p.arity]
    if len(names) != p.arity:
        raise ValueError("one name per variable required")
    lines = [f"arity {p.arity} vars {' '.join(names)}"]
    for exps, coeff in p.items_grlex():
        lines.append(f"{' '.join(str(e) for e in exps)} : {coeff.tokens()}")
    return "\n".join(lines) + "\n"


def poly_from_text(text: str) -> tuple[MultiPoly, tuple[str, ...]]:
    """Parse the textual polynomial format; returns (poly, variable names)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty polynomial file")
    header = lines[0].split()
    if len(header) < 4 or header[0] != "arity" or header[2] != "vars":
        raise ValueError(f"bad header: {lines[0]!r}")
    arity = int(header[1])
    names = tuple(header[3:])
    if len(names) != arity:
        raise ValueError("header variable count does not match arity")
    terms = {}
    for ln in lines[1:]:
        left, _, right = ln.partition(":")
        exps = tuple(int(tok) for tok in left.split())
        coeff = Cyclo12.from_tokens(right.split())
        if exps in terms:
            raise ValueError(f"duplicate exponent tuple {exps}")
        terms[exps] = coeff
    return MultiPoly(arity, terms), names
