"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph, tree or CNF input."""


class NotConnected(ValueError):
    pass


class NotStarColored(ValueError):
    pass


class NonStarComponent(ValueError):
    pass


class InvalidParameters(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class BoundExceeded(ValueError):
    """Instance too large for an exhaustive reference routine."""


class NoValidRepair(RuntimeError):
    """No deleted edge admits a valid conflict set during extremal repair."""


class InternalGuaranteeViolation(RuntimeError):
    """A stage that cannot fail on correct code did fail."""
