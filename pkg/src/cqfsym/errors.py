"""Exception types shared across the package."""

from __future__ import annotations


class CQFError(Exception):
    """Base class for all package errors."""


class NotSymmetric(CQFError):
    """Raised when a symmetric-only operation receives a nonsymmetric element."""

    def __init__(self, witness):
        self.witness = witness
        a, b = witness
        super().__init__(f"not symmetric: coefficients of {a} and {b} differ")


class InconsistentExpansion(CQFError):
    """A triangular solve left a nonzero residue; this indicates an arithmetic bug."""


class NonIntegralDivision(CQFError):
    pass


class InvalidGraph(CQFError, ValueError):
    pass


class InvalidParams(CQFError, ValueError):
    pass


class InvalidFunction(InvalidParams):
    pass


class InvalidSwapSite(CQFError, ValueError):
    pass


class ImproperColoring(CQFError, ValueError):
    pass


class WrongClass(CQFError, ValueError):
    """A coloring was passed to a map outside the map's domain class."""


class InvalidA(CQFError, ValueError):
    pass


class MalformedInput(CQFError, ValueError):
    pass


class StructureViolation(CQFError):
    """A colored subgraph component is neither a path nor the bottom cycle."""


class PreconditionViolation(CQFError):
    pass


class NotFound(CQFError):
    pass


class SizeGuard(CQFError):
    """Refusal to run an enumeration beyond the configured size bound."""


class UnknownTheorem(CQFError, KeyError):
    pass
