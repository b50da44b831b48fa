"""Exception hierarchy shared by the loaders and solvers."""


class HyperdenseError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HyperdenseError, ValueError):
    """Malformed instance text or JSON."""


class ValidationError(HyperdenseError, ValueError):
    """Instance is well-formed but violates a weight-function requirement."""


class NotConvexError(ValidationError):
    """An algorithm needing convex weight tables got a non-convex one."""


class NotConcaveError(ValidationError):
    """The concave closed form was asked to solve a non-concave instance."""


class EmptySetError(HyperdenseError, ValueError):
    pass


class EmptyGraphError(HyperdenseError, ValueError):
    pass


class TooLargeError(HyperdenseError, ValueError):
    """Exhaustive enumeration refused because the instance is too big."""


class SizeLimitError(HyperdenseError, ValueError):
    pass
