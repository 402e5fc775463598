class BoxError(Exception):
    status = 1


class FormatError(BoxError):
    """Raised when a file, rational literal or flag can not be parsed."""
    status = 3


class ValidationError(BoxError):
    status = 1


class SignalingError(ValidationError):
    """Raised when an operation needs a non-signaling box."""
    pass


class ScenarioMismatch(ValidationError):
    pass


class InfeasibleError(BoxError):
    """Raised when a target box lies outside the hull of a vertex set."""
    status = 2


class CapExceeded(BoxError):
    status = 2


class InconsistencyError(BoxError):
    status = 2
