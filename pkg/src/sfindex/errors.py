"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SFIndexError(Exception):
    """Base class for all errors raised by sfindex."""


class DimensionMismatch(SFIndexError, ValueError):
    pass


class ContainmentError(SFIndexError, ValueError):
    pass


class LayoutError(SFIndexError, ValueError):
    """Operands live on incompatible coordinate layouts."""


class IncompatibleVariants(SFIndexError, ValueError):
    """The requested operation leaves the computable operator class."""


class UnsupportedOperator(SFIndexError, ValueError):
    pass


class NotSemiFredholm(SFIndexError, ValueError):
    def __init__(self, msg: str, vertex: str | None = None):
        super().__init__(msg)
        self.vertex = vertex


class UndefinedSum(SFIndexError, ArithmeticError):
    """Raised for the sum of +inf and -inf."""


class TruncationError(SFIndexError, RuntimeError):
    """Two consecutive truncation sizes disagreed; indicates a bug."""


class AdmissibilityError(SFIndexError, ValueError):
    def __init__(self, msg: str, edge: tuple[str, str] | None = None, edge_index: int | None = None):
        super().__init__(msg)
        self.edge = edge
        self.edge_index = edge_index


class NonConstantIndex(SFIndexError, ValueError):
    def __init__(self, component: str, x: str, y: str, ix: object, iy: object):
        super().__init__(
            f"index not constant on component {component!r}: "
            f"ind({x})={ix} but ind({y})={iy}"
        )
        self.component = component
        self.x = x
        self.y = y


class MixedTypeError(SFIndexError, ValueError):
    pass


class NotCoprime(SFIndexError, ValueError):
    pass


class PreconditionError(SFIndexError, ValueError):
    pass


class SchemaError(SFIndexError, ValueError):
    def __init__(self, msg: str, path: str = "$"):
        super().__init__(f"{path}: {msg}")
        self.path = path
