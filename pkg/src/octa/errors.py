"""Exception hierarchy shared by the library and the CLI."""


class OctaError(ValueError):
    """Base class for domain errors; ``field`` names the offending input."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field

    def to_dict(self) -> dict:
        out = {"error": str(self), "type": type(self).__name__}
        if self.field is not None:
            out["field"] = self.field
        return out


class ElementSyntaxError(OctaError):
    pass


class SpecError(OctaError):
    pass


class GuardError(OctaError):
    """Input exceeds a size guard or violates a precondition."""


class MembershipError(OctaError):
    """Element lies outside the subgroup an operation is defined on."""
