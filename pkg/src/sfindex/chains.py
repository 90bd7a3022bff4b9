"""Kernel and range chains: c_n, c'_n, ascent, descent, k_n and uniform descent.

Everything is driven by two identities that hold for any operator:

    c'_n(T) = dim N(T^{n+1}) / N(T^n) = dim (N(T) n R(T^n))
    k_n(T)  = c'_n(T) - c'_{n+1}(T)

so ``c'`` is non-increasing and, when the index is defined, ``c'_n - c_n``
equals it. Because every model operator has closed range, ``c_n(T)`` is
``c'_n`` of the transposed model and descent questions reduce to ascent
questions about the transpose.

A window-only operator is the matrix ``M`` of its window on ``[0, W)`` plus
the zero operator on the infinite tail; its chains are computed from ``M``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import TruncationError, UnsupportedOperator
from .opmodel import (
    POS_INF,
    DirectSum,
    ExtInt,
    MatrixOp,
    OmegaShift,
    Operator,
    ShiftBand,
    alpha,
    index,
    power,
    range_meet_dim,
    shift_kernel,
    transpose,
)
from .ratlin import Mat, Subspace, image_basis, kernel_basis, quotient_dim, subspace_intersect, subspace_sum
from .results import ChainResult, Verdict, combine_max

_INF = POS_INF


def default_bound(t: Operator) -> int:
    match t:
        case ShiftBand():
            return max(8, 2 * (t.W + t.fwd + t.bwd))
        case MatrixOp():
            return max(8, t.n)
        case DirectSum():
            return max(default_bound(p) for p in t.parts)
    return 8


def _window_matrix(t: ShiftBand) -> MatrixOp:
    return MatrixOp(t.window)


def _is_window_only(t: Operator) -> bool:
    return isinstance(t, ShiftBand) and not t.monomial


# --- c_n and c'_n -----------------------------------------------------------------------

@lru_cache(maxsize=16384)
def c_prime_n(t: Operator, n: int) -> ExtInt:
    """``dim N(t^{n+1}) / N(t^n)``."""
    match t:
        case MatrixOp():
            lo, hi = kernel_basis(t.mat.power(n)), kernel_basis(t.mat.power(n + 1))
            val = alpha(power(t, n + 1)) - alpha(power(t, n))
            if quotient_dim(hi, lo) != val.value:
                raise TruncationError("kernel chain quotient disagrees with nullity difference")
            return val
        case ShiftBand() if t.monomial:
            return alpha(power(t, n + 1)) - alpha(power(t, n))
        case ShiftBand():
            return _INF if n == 0 else c_prime_n(_window_matrix(t), n)
        case OmegaShift():
            return _INF if t.dir == "bwd" else ExtInt(0)
        case DirectSum():
            return sum((c_prime_n(p, n) for p in t.parts), ExtInt(0))
    raise UnsupportedOperator(type(t).__name__)


def c_n(t: Operator, n: int) -> ExtInt:
    """``dim R(t^n) / R(t^{n+1})``; matrices also check the direct quotient."""
    if isinstance(t, MatrixOp):
        hi, lo = image_basis(t.mat.power(n)), image_basis(t.mat.power(n + 1))
        val = c_prime_n(transpose(t), n)
        if quotient_dim(hi, lo) != val.value:
            raise TruncationError("range chain quotient disagrees with defect difference")
        return val
    return c_prime_n(transpose(t), n)


# --- ascent / descent ------------------------------------------------------------------------

def _first_zero(t: Operator, bound: int) -> ChainResult:
    for n in range(bound + 1):
        if c_prime_n(t, n) == 0:
            return ChainResult.finite(n)
    return ChainResult.exceeds(bound)


def ascent(t: Operator, n_max: int | None = None) -> ChainResult:
    """Smallest ``n`` with ``N(t^n) = N(t^{n+1})``.

    One equality already fixes the whole tail of a kernel chain, so the
    first zero of ``c'`` is a proof. For matrices the dimension bounds the search.
    """
    match t:
        case MatrixOp():
            res = _first_zero(t, t.n)
            assert res.is_finite, "matrix kernel chain must stabilize by its dimension"
            return res
        case ShiftBand() if t.monomial:
            return _first_zero(t, default_bound(t) if n_max is None else n_max)
        case ShiftBand():
            return ChainResult.finite(max(1, ascent(_window_matrix(t)).n))
        case OmegaShift():
            return ChainResult.infinite() if t.dir == "bwd" else ChainResult.finite(0)
        case DirectSum():
            return combine_max(ascent(p, n_max) for p in t.parts)
    raise UnsupportedOperator(type(t).__name__)


def descent(t: Operator, n_max: int | None = None) -> ChainResult:
    """Smallest ``n`` with ``R(t^n) = R(t^{n+1})``, via the transposed model."""
    return ascent(transpose(t), n_max)


def essential_ascent(t: Operator, n_max: int | None = None) -> ChainResult:
    """Smallest ``n`` with ``c'_n`` finite."""
    match t:
        case MatrixOp():
            return ChainResult.finite(0)
        case ShiftBand():
            return ChainResult.finite(0 if t.monomial else 1)
        case OmegaShift():
            return ChainResult.infinite() if t.dir == "bwd" else ChainResult.finite(0)
        case DirectSum():
            return combine_max(essential_ascent(p, n_max) for p in t.parts)
    raise UnsupportedOperator(type(t).__name__)


def essential_descent(t: Operator, n_max: int | None = None) -> ChainResult:
    return essential_ascent(transpose(t), n_max)


# --- k_n -----------------------------------------------------------------------------------

def _meet_kernel_range(t: ShiftBand, n: int) -> int:
    """``dim (N(t) n R(t^n))`` by range-membership solves on a kernel basis."""
    ker = shift_kernel(t)
    if n == 0 or not ker:
        return len(ker)
    return range_meet_dim(power(t, n), ker)


def k_n(t: Operator, n: int) -> ExtInt:
    """``dim (R(t^n) n N(t)) / (R(t^{n+1}) n N(t))``."""
    match t:
        case MatrixOp():
            ker = kernel_basis(t.mat)
            hi = subspace_intersect(image_basis(t.mat.power(n)), ker)
            lo = subspace_intersect(image_basis(t.mat.power(n + 1)), ker)
            return ExtInt(quotient_dim(hi, lo))
        case ShiftBand() if t.monomial:
            hi, lo = _meet_kernel_range(t, n), _meet_kernel_range(t, n + 1)
            if hi != c_prime_n(t, n) or lo != c_prime_n(t, n + 1):
                raise TruncationError("range-membership solve disagrees with the kernel chain")
            return ExtInt(hi - lo)
        case ShiftBand():
            return _INF if n == 0 else k_n(_window_matrix(t), n)
        case OmegaShift():
            return ExtInt(0)
        case DirectSum():
            return sum((k_n(p, n) for p in t.parts), ExtInt(0))
    raise UnsupportedOperator(type(t).__name__)


# --- hyperrange / hyperkernel ------------------------------------------------------------------

def _need_matrix(t: Operator) -> Mat:
    if not isinstance(t, MatrixOp):
        raise UnsupportedOperator("hyperrange and hyperkernel are computed for matrices only")
    return t.mat


def hyperrange(t: Operator) -> Subspace:
    m = _need_matrix(t)
    return image_basis(m.power(m.rows))


def hyperkernel(t: Operator) -> Subspace:
    m = _need_matrix(t)
    return kernel_basis(m.power(m.rows))


def kernel_in_hyperrange(t: Operator) -> bool:
    m = _need_matrix(t)
    return hyperrange(t).contains(kernel_basis(m))


# --- uniform descent -------------------------------------------------------------------------

def _matrix_uniform_descent(m: Mat) -> int:
    r = image_basis(m)
    chain = [subspace_sum(r, kernel_basis(m.power(n))) for n in range(m.rows + 2)]
    d = len(chain) - 1
    while d > 0 and chain[d - 1] == chain[d]:
        d -= 1
    return d


def uniform_descent_from(t: Operator, n_max: int | None = None) -> ChainResult:
    """Smallest ``d`` with ``R(t) + N(t^n)`` stationary for ``n >= d``.

    Successive quotients of that chain have dimension ``k_n``, so stationarity
    from ``d`` means ``c'`` is constant from ``d``. For a shift-band ``c'`` is
    non-increasing and bounded below by ``max(ind, 0)``; reaching the floor
    certifies the answer, otherwise the search reports the bound.
    """
    match t:
        case MatrixOp():
            return ChainResult.finite(_matrix_uniform_descent(t.mat))
        case ShiftBand() if t.monomial:
            floor = max(index(t).value, 0)
            bound = default_bound(t) if n_max is None else n_max
            for n in range(bound + 1):
                if c_prime_n(t, n) == floor:
                    return ChainResult.finite(n)
            return ChainResult.exceeds(bound)
        case ShiftBand():
            return ChainResult.finite(max(1, _matrix_uniform_descent(t.window)))
        case OmegaShift():
            return ChainResult.finite(0)
        case DirectSum():
            return combine_max(uniform_descent_from(p, n_max) for p in t.parts)
    raise UnsupportedOperator(type(t).__name__)


def has_tud(t: Operator, n_max: int | None = None) -> Verdict:
    """Topological uniform descent; the sum ``R(t) + N(t^d)`` is closed for every model operator."""
    return uniform_descent_from(t, n_max).verdict()
