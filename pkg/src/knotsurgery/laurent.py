"""Exact one-variable Laurent polynomials over the integers.

Coefficients are arbitrary-precision Python ints; twist parameters blow up
coefficient sizes quickly and overflow must be impossible.  The zero
polynomial is the empty coefficient map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class NotNormalizable(ValueError):
    """No unit multiple of the polynomial is symmetric with value 1 at t=1."""


class LaurentPoly:
    """Sparse Laurent polynomial, exponent -> nonzero int coefficient."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, a in items:
                if a:
                    a0 = c.get(e, 0) + a
                    if a0:
                        c[int(e)] = a0
                    else:
                        c.pop(e, None)
        self._c = c

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def const(cls, a):
        return cls({0: int(a)})

    @classmethod
    def t(cls, exp=1, coeff=1):
        return cls({exp: coeff})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self._c)

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.const(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly({e: a * other for e, a in self._c.items()})
        c = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + a1 * a2
                if s:
                    c[e] = s
                else:
                    c.pop(e, None)
        out = LaurentPoly()
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers only for units; use shifted()")
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shifted(self, k):
        """Multiply by t**k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    # -- inspection --------------------------------------------------------

    def coeff(self, e):
        return self._c.get(e, 0)

    def coeffs(self):
        return dict(self._c)

    def min_exp(self):
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self):
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def __call__(self, x):
        """Evaluate at x (int or Fraction; negative exponents need x != 0)."""
        total = Fraction(0)
        for e, a in self._c.items():
            total += a * Fraction(x) ** e
        if total.denominator == 1:
            return int(total)
        return total

    def is_symmetric(self):
        return all(self._c.get(-e, 0) == a for e, a in self._c.items())

    # -- display / serialization --------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            a = self._c[e]
            if e == 0:
                term = str(abs(a))
            else:
                mag = "" if abs(a) == 1 else f"{abs(a)}*"
                term = f"{mag}t^{e}" if e != 1 else f"{mag}t"
            if not parts:
                parts.append(term if a > 0 else "-" + term)
            else:
                parts.append(("+ " if a > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def to_json(self):
        """List of [exponent, coefficient] pairs sorted by exponent."""
        return [[e, self._c[e]] for e in sorted(self._c)]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(a) for e, a in data})


@dataclass(frozen=True)
class SymmetricAlexander:
    """Symmetric-normalized Alexander polynomial and its degree.

    Invariants: poly(1) == 1, coefficients symmetric under t <-> 1/t, and
    degree is the top exponent (0 for the constant polynomial 1).  The degree
    here is half the usual span.
    """

    poly: LaurentPoly
    degree: int

    def __str__(self):
        return str(self.poly)

    def to_json(self):
        return {"poly": self.poly.to_json(), "degree": self.degree}


def multiply(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product with zero coefficients pruned."""
    return a * b


def normalize_symmetric(p: LaurentPoly) -> SymmetricAlexander:
    """Return the unit multiple +-t^k * p that is symmetric with value 1 at 1.

    The only candidate shift centers the exponent span at 0 (the midpoint is
    unique, so ties cannot occur); the sign is forced by p(1).  Raises
    NotNormalizable when p(1) != +-1, the span midpoint is not an integer, or
    the centered polynomial is not symmetric.
    """
    if p.is_zero():
        raise NotNormalizable("zero polynomial")
    v = p(1)
    if v not in (1, -1):
        raise NotNormalizable(f"p(1) = {v}, expected +-1")
    lo, hi = p.min_exp(), p.max_exp()
    if (lo + hi) % 2 != 0:
        raise NotNormalizable("exponent span has no integer midpoint")
    q = p.shifted(-(lo + hi) // 2)
    if v == -1:
        q = -q
    if not q.is_symmetric():
        raise NotNormalizable("no unit multiple is symmetric")
    return SymmetricAlexander(q, q.max_exp() if q != LaurentPoly.one() else 0)


def degree(p: SymmetricAlexander) -> int:
    """The degree d of the symmetric form (half the span)."""
    return p.degree
