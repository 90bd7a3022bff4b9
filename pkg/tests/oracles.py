"""Independent reference computations used by the tests.

Nothing here imports the elimination code under test: ranks come from plain
Gaussian elimination or minor expansion, and shift operators are expanded
from their raw (un-normalized) monomials.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def laplace_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


def rank_by_minors(rows: list[list[Fraction]]) -> int:
    """Largest k with a nonzero k x k minor. Exponential; keep inputs tiny."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                if laplace_det([[rows[i][j] for j in ci] for i in ri]):
                    return k
    return 0


def gauss_rank(rows: list[list[Fraction]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rank, ncols = 0, len(a[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def matmul(x: list[list[Fraction]], y: list[list[Fraction]]) -> list[list[Fraction]]:
    return [[sum((x[i][k] * y[k][j] for k in range(len(y))), Fraction(0)) for j in range(len(y[0]))]
            for i in range(len(x))]


def mpow(x: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    out = [[Fraction(int(i == j)) for j in range(len(x))] for i in range(len(x))]
    for _ in range(n):
        out = matmul(out, x)
    return out


def transpose(x: list[list[Fraction]]) -> list[list[Fraction]]:
    return [list(c) for c in zip(*x)] if x else []


def hstack(x, y):
    return [a + b for a, b in zip(x, y)]


def col_span_dim(cols: list[list[Fraction]]) -> int:
    return gauss_rank(cols) if cols else 0


def meet_dim(e: list[list[Fraction]], f: list[list[Fraction]]) -> int:
    """``dim(span e  n  span f)`` from the dimension formula."""
    return col_span_dim(e) + col_span_dim(f) - col_span_dim(e + f)


def nullspace(x: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the kernel, via elimination written out here."""
    a = [[Fraction(v) for v in r] for r in x]
    ncols = len(a[0]) if a else 0
    piv_cols, r = [], 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        a[r] = [v / a[r][c] for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [u - f * w for u, w in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in piv_cols):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, c in enumerate(piv_cols):
            v[c] = -a[k][free]
        basis.append(v)
    return basis


# --- shift operators from raw monomials --------------------------------------------------

def raw_shift_entry(a: int, b: int, window, i: int, j: int, monomial: bool = True) -> Fraction:
    """Entry ``(i, j)`` of ``S+^a S-^b + F`` without any normalization."""
    x = Fraction(0)
    if monomial and j >= b and i == j - b + a:
        x += 1
    if i < window.rows and j < window.rows:
        x += window[i, j]
    return x


def raw_shift_dense(a: int, b: int, window, rows: int, cols: int, monomial: bool = True):
    return [[raw_shift_entry(a, b, window, i, j, monomial) for j in range(cols)] for i in range(rows)]


def shift_alpha_beta(a: int, b: int, window) -> tuple[int, int]:
    """Nullity and defect of ``S+^a S-^b + F`` from finite sections.

    Kernel vectors of ``T`` and of its transpose are supported below
    ``W + a + b``, so sections of that size plus a margin are exact.
    """
    n = window.rows + a + b + 3
    alpha = n - gauss_rank(raw_shift_dense(a, b, window, n + a + b, n))
    beta = n - gauss_rank(raw_shift_dense(a, b, window, n, n + a + b))
    return alpha, beta


def k0_by_annihilators(dense: list[list[Fraction]]) -> int:
    """``k_0 = dim N(T) / (N(T) n R(T))`` as the rank of ``Y^T K``.

    ``K`` spans the kernel, ``Y`` the kernel of the transpose; ``x`` is in
    the range iff it is annihilated by every column of ``Y``.
    """
    k = nullspace(dense)
    y = nullspace(transpose(dense))
    if not k or not y:
        return 0
    return gauss_rank([[sum((yy[i] * kk[i] for i in range(len(kk))), Fraction(0)) for kk in k] for yy in y])


def c_prime(dense: list[list[Fraction]], n: int) -> int:
    """``dim(N(T) n R(T^n))`` for a square matrix."""
    ker = nullspace(dense)
    rng = transpose(mpow(dense, n))
    return meet_dim(ker, rng)


def first_stable_rank(dense: list[list[Fraction]]) -> int:
    """Ascent (= descent) of a square matrix: first n with rank T^n = rank T^(n+1)."""
    n = 0
    while gauss_rank(mpow(dense, n)) != gauss_rank(mpow(dense, n + 1)):
        n += 1
    return n


def uniform_descent(dense: list[list[Fraction]]) -> int:
    """First ``d`` with ``R(T) + N(T^n)`` constant for every ``n >= d``."""
    size = len(dense)
    rng = transpose(dense)
    dims = [col_span_dim(rng + nullspace(mpow(dense, n))) for n in range(size + 2)]
    d = size + 1
    while d > 0 and dims[d - 1] == dims[-1]:
        d -= 1
    return d
