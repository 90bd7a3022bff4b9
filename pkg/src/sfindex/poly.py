"""Univariate polynomials over Q and their evaluation at matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotCoprime
from .ratlin import Mat, rat_str, to_rat


def _trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly:
    """Coefficients are stored low degree first; the zero polynomial is ``()``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(to_rat(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: object) -> Poly:
        return cls(tuple(to_rat(c) for c in coeffs))

    @classmethod
    def x(cls) -> Poly:
        return cls.of(0, 1)

    @classmethod
    def from_roots(cls, roots: Sequence[object]) -> Poly:
        p = cls.of(1)
        for r in roots:
            p = p * cls.of(-to_rat(r), 1)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out))

    def scale(self, c: object) -> Poly:
        c = to_rat(c)
        return Poly(tuple(c * a for a in self.coeffs))

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        lc = other.lead()
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            if c:
                quo[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(tuple(quo)), Poly(tuple(rem[:dq]) if dq > 0 else ())

    def monic(self) -> Poly:
        return self.scale(1 / self.lead())

    def __call__(self, x: object) -> Fraction:
        x = to_rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: Mat) -> Mat:
        """Horner evaluation ``p(m)``; ``m`` must be square."""
        n = m.rows
        acc = Mat.zeros(n)
        ident = Mat.identity(n)
        for c in reversed(self.coeffs):
            acc = acc @ m + ident.scale(c)
        return acc

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Poly({self.to_json()})"


def poly_gcdex(p: Poly, q: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns ``(g, u, v)`` with ``u p + v q = g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = Poly.of(1), Poly(())
    t0, t1 = Poly(()), Poly.of(1)
    while not r1.is_zero():
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lead()
    return r0.scale(1 / lc), s0.scale(1 / lc), t0.scale(1 / lc)


def bezout_coefficients(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """``(u, v)`` with ``u p + v q = 1``; raises :class:`NotCoprime` otherwise."""
    g, u, v = poly_gcdex(p, q)
    if g.degree != 0:
        raise NotCoprime(f"gcd of {p} and {q} has degree {g.degree}")
    return u, v
