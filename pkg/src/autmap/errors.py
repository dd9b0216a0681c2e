"""Exception hierarchy shared by every module of the package."""


class AutmapError(Exception):
    """Base class for all errors raised by autmap."""


class PreconditionError(AutmapError, ValueError):
    """An input violates the documented precondition of an operation."""


class ParseError(PreconditionError):
    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class UnknownVariable(PreconditionError):
    pass


class RegistryMismatch(PreconditionError):
    pass


class ArityMismatch(PreconditionError):
    pass


class ZeroPolynomial(PreconditionError):
    pass


class VariableCollision(PreconditionError):
    pass


class NotUnivariate(PreconditionError):
    pass


class EmptyInput(PreconditionError):
    pass


class ConstantInput(PreconditionError):
    pass


class NonIntegerInput(PreconditionError):
    pass


class DimensionTooSmall(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class PointNotOnCurve(PreconditionError):
    pass


class SingularCurve(PreconditionError):
    pass


class ZeroProjectivePoint(PreconditionError):
    pass


class InfiniteOrderSanityFailed(AutmapError):
    pass


class ResourceCap(AutmapError):
    """A configured work budget was exceeded; the instance is too large, not wrong."""


class CSearchExhausted(AutmapError):
    """No smooth candidate up to ``c_max``; raise the cap rather than conclude anything."""


class EquivalenceViolation(AutmapError):
    """The bounded searches disagree. Always an implementation bug."""
