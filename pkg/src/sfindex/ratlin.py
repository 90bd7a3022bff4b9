"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; matrices are immutable :class:`Mat`
values. Row reduction is fraction-free (Bareiss) on integer-scaled rows and
only normalizes to rationals at the end, which keeps intermediate entries
bounded by the minors of the input.

Subspaces of ``Q^n`` are stored in canonical form: the rows of the reduced
row-echelon form of their basis vectors. That is the transpose of the reduced
column-echelon form of the basis matrix, so two subspaces compare equal iff
they are equal as sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import ContainmentError, DimensionMismatch

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rat(x: object) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE "):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rat_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch(f"entries do not form a {self.rows}x{self.cols} array")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Mat:
        data = tuple(tuple(to_rat(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[object]], rows: int) -> Mat:
        data = tuple(tuple(to_rat(c[i]) for c in cols) for i in range(rows))
        return cls(rows, len(cols), data)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Mat:
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Sequence[object]) -> Mat:
        vals = [to_rat(v) for v in values]
        n = len(vals)
        return cls(n, n, tuple(tuple(vals[i] if i == j else _ZERO for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def _check_same_shape(self, other: Mat) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Mat) -> Mat:
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat) -> Mat:
        self._check_same_shape(other)
        return Mat(self.rows, self.cols, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> Mat:
        return self.scale(-1)

    def scale(self, c: object) -> Mat:
        c = to_rat(c)
        return Mat(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: Mat) -> Mat:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ocols = other.columns()
        return Mat(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), _ZERO) for c in ocols)
            for r in self.entries))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), _ZERO) for r in self.entries)

    @property
    def T(self) -> Mat:
        return Mat(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                   tuple(() for _ in range(self.cols)))

    def transpose(self) -> Mat:
        return self.T

    def pad(self, rows: int, cols: int | None = None) -> Mat:
        """Zero-extend to ``rows x cols`` (never truncates)."""
        cols = rows if cols is None else cols
        if rows < self.rows or cols < self.cols:
            raise DimensionMismatch("pad cannot shrink a matrix")
        data = [tuple(r) + (_ZERO,) * (cols - self.cols) for r in self.entries]
        data += [(_ZERO,) * cols] * (rows - self.rows)
        return Mat(rows, cols, tuple(data))

    def submatrix(self, rows: int, cols: int) -> Mat:
        return Mat(rows, cols, tuple(tuple(r[:cols]) for r in self.entries[:rows]))

    def inf_norm(self) -> Fraction:
        """Induced infinity-norm (max absolute row sum)."""
        return max((sum((abs(x) for x in r), _ZERO) for r in self.entries), default=_ZERO)

    def one_norm(self) -> Fraction:
        return self.T.inf_norm()

    def rank(self) -> int:
        return rref(self)[1]

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        return _bareiss_det(self)

    def inverse(self) -> Mat:
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = Mat(n, 2 * n, tuple(r + Mat.identity(n).entries[i] for i, r in enumerate(self.entries)))
        red, rk = rref(aug)
        if any(red[i, i] != 1 for i in range(n)) or rk < n:
            raise ZeroDivisionError("matrix is singular")
        return Mat(n, n, tuple(r[n:] for r in red.entries))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def power(self, k: int) -> Mat:
        if k < 0:
            raise ValueError("negative power")
        result = Mat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def to_json(self) -> list[list[str]]:
        return [[rat_str(x) for x in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"Mat({self.to_json()})"


# --- elimination -----------------------------------------------------------

def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            d = x.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _bareiss(a: list[list[int]], ncols: int) -> list[int]:
    """In-place fraction-free forward elimination; returns pivot columns.

    After processing pivot ``(r, c)`` every entry below row ``r`` is a minor
    of the input, so the division by the previous pivot is exact.
    """
    m = len(a)
    prev = 1
    r = 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        pr = a[r]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            if f:
                a[i] = [(p * x - f * y) // prev for x, y in zip(ai, pr)]
            elif prev != p:
                a[i] = [p * x // prev for x in ai]
        prev = p
        pivots.append(c)
        r += 1
    return pivots


def _bareiss_det(m: Mat) -> Fraction:
    n = m.rows
    if n == 0:
        return _ONE
    dens = 1
    rows = []
    for r in m.entries:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        dens *= den
        rows.append([x.numerator * (den // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            return _ZERO
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = p
    return Fraction(sign * rows[n - 1][n - 1], dens)


def rref(m: Mat) -> tuple[Mat, int]:
    """Reduced row-echelon form and rank, exact over Q."""
    rows = _integer_rows(m.entries)
    pivots = _bareiss(rows, m.cols)
    red = [[Fraction(x) for x in rows[k]] for k in range(len(pivots))]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        p = red[k][c]
        if p != 1:
            red[k] = [x / p for x in red[k]]
        rk = red[k]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [a - f * b for a, b in zip(red[i], rk)]
    data = [tuple(r) for r in red] + [(_ZERO,) * m.cols] * (m.rows - len(pivots))
    return Mat(m.rows, m.cols, tuple(data)), len(pivots)


def pivot_columns(red: Mat) -> list[int]:
    piv = []
    for r in red.entries:
        j = next((j for j, x in enumerate(r) if x), None)
        if j is None:
            break
        piv.append(j)
    return piv


def nullspace_vectors(m: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : m x = 0}`` read off the free columns of the RREF."""
    red, rk = rref(m)
    piv = pivot_columns(red)
    pivset = set(piv)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [_ZERO] * m.cols
        v[f] = _ONE
        for k, c in enumerate(piv):
            v[c] = -red[k, f]
        basis.append(tuple(v))
    return basis


# --- subspaces --------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    canon: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[object]], ambient_dim: int) -> Subspace:
        vecs = [tuple(to_rat(x) for x in v) for v in vectors]
        if any(len(v) != ambient_dim for v in vecs):
            raise DimensionMismatch(f"vector length differs from ambient dimension {ambient_dim}")
        if not vecs:
            return cls(ambient_dim, ())
        red, rk = rref(Mat(len(vecs), ambient_dim, tuple(vecs)))
        return cls(ambient_dim, red.entries[:rk])

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, Mat.identity(n).entries)

    @property
    def dim(self) -> int:
        return len(self.canon)

    @property
    def basis(self) -> Mat:
        """Basis vectors as matrix columns (reduced column-echelon form)."""
        return Mat.from_cols(self.canon, self.ambient_dim)

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return list(self.canon)

    def contains_vector(self, v: Sequence[object]) -> bool:
        return Subspace.span(list(self.canon) + [v], self.ambient_dim).dim == self.dim

    def contains(self, other: Subspace) -> bool:
        """True iff ``other`` is a subspace of ``self``."""
        _check_ambient(self, other)
        return subspace_sum(self, other).dim == self.dim

    def __repr__(self) -> str:
        return f"Subspace(n={self.ambient_dim}, dim={self.dim})"


def _check_ambient(e: Subspace, f: Subspace) -> None:
    if e.ambient_dim != f.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {e.ambient_dim} and {f.ambient_dim} differ")


def kernel_basis(m: Mat) -> Subspace:
    return Subspace.span(nullspace_vectors(m), m.cols)


def image_basis(m: Mat) -> Subspace:
    return Subspace.span(m.columns(), m.rows)


def subspace_sum(e: Subspace, f: Subspace) -> Subspace:
    _check_ambient(e, f)
    return Subspace.span(list(e.canon) + list(f.canon), e.ambient_dim)


def subspace_intersect(e: Subspace, f: Subspace) -> Subspace:
    """Zassenhaus: reduce ``[e | e ; f | 0]``; rows with zero left half span the meet."""
    _check_ambient(e, f)
    n = e.ambient_dim
    if e.dim == 0 or f.dim == 0:
        return Subspace.zero(n)
    zero = (_ZERO,) * n
    rows = [v + v for v in e.canon] + [w + zero for w in f.canon]
    red, rk = rref(Mat(len(rows), 2 * n, tuple(rows)))
    meet = [r[n:] for r in red.entries[:rk] if not any(r[:n])]
    return Subspace.span(meet, n)


def quotient_dim(e: Subspace, f: Subspace) -> int:
    """``dim(e / f)``; requires ``f`` contained in ``e``."""
    _check_ambient(e, f)
    if not e.contains(f):
        raise ContainmentError("quotient requires the second subspace inside the first")
    return e.dim - f.dim


def essentially_included(e: Subspace, f: Subspace) -> bool:
    """Always true here: every subspace is finite-dimensional, so ``G = e`` works."""
    _check_ambient(e, f)
    return True


def essential_inclusion_witness(e: Subspace, f: Subspace) -> Subspace:
    """A finite-dimensional ``G`` with ``e`` inside ``f + G``."""
    _check_ambient(e, f)
    return e


def charpoly(m: Mat) -> tuple[Fraction, ...]:
    """Characteristic polynomial ``det(xI - m)``, coefficients low to high.

    Faddeev-LeVerrier recursion; exact over Q.
    """
    if not m.is_square():
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    mk = Mat.zeros(n)
    ident = Mat.identity(n)
    for k in range(1, n + 1):
        mk = m @ (mk + ident.scale(coeffs[n - k + 1]))
        tr = sum((mk[i, i] for i in range(n)), _ZERO)
        coeffs[n - k] = -tr / k
    return tuple(coeffs)
