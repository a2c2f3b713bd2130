from __future__ import annotations


class KummerBBError(Exception):
    """Base error for all kummer_bb errors."""

    def __init__(self, code: str, message: str, details: object = None) -> None:
        super().__init__(message)
        self.code = code
        self.details = details


class DegenerateError(KummerBBError):
    """Gram matrix (or its reduction mod p) is degenerate."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("DEGENERATE", message, details)


class NotPrimitiveError(KummerBBError):
    """Vector or sublattice is not primitive."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("NOT_PRIMITIVE", message, details)


class NotIsotropicError(KummerBBError):
    """Vector or sublattice is not (totally) isotropic."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("NOT_ISOTROPIC", message, details)


class InvalidArgumentError(KummerBBError):
    """Caller supplied an argument outside the operation's domain."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("INVALID_ARGUMENT", message, details)


class MissingMarkError(KummerBBError):
    """Operation needs a marked vector the lattice does not carry."""

    def __init__(self, mark: str) -> None:
        super().__init__("MISSING_MARK", f"Lattice has no mark {mark!r}", mark)


class NonIntegralError(KummerBBError):
    """Rational isometry does not preserve the integral lattice."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("NON_INTEGRAL", message, details)


class BudgetExceededError(KummerBBError):
    """Exhaustive enumeration would exceed its budget."""

    def __init__(self, size: int, budget: int) -> None:
        super().__init__(
            "BUDGET_EXCEEDED",
            f"Enumeration of {size} candidates exceeds budget {budget}",
            {"size": size, "budget": budget},
        )


class ReductionError(KummerBBError):
    """A constructive reduction could not be completed."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("REDUCTION_FAILED", message, details)


class InvariantViolationError(KummerBBError):
    """A computed object failed its own post-condition."""

    def __init__(self, message: str, details: object = None) -> None:
        super().__init__("INVARIANT_VIOLATION", message, details)
