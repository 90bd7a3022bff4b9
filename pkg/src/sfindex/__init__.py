"""Exact semi-Fredholm invariants, family indices and regularity membership."""

from __future__ import annotations

from .chains import ascent, c_n, c_prime_n, descent, k_n
from .family import OpFamily, ParamSpace, family_index
from .opmodel import (
    DirectSum,
    ExtInt,
    MatrixOp,
    OmegaShift,
    ShiftBand,
    alpha,
    beta,
    index,
    jordan_block,
    s_minus,
    s_plus,
)
from .regmem import Reg, Semireg, mem
from .results import ChainResult, Report, Verdict

__version__ = "0.1.0"

__all__ = [
    "ChainResult", "DirectSum", "ExtInt", "MatrixOp", "OmegaShift", "OpFamily", "ParamSpace", "Reg",
    "Report", "Semireg", "ShiftBand", "Verdict", "alpha", "ascent", "beta", "c_n", "c_prime_n",
    "descent", "family_index", "index", "jordan_block", "k_n", "mem", "s_minus", "s_plus",
]
