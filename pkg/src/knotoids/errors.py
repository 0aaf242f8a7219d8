"""Exception hierarchy.

Every library error carries a short ``reason`` string that the command line
prints as a machine-readable prefix.
"""


class KnotoidError(Exception):
    reason = "error"


class CodeSyntaxError(KnotoidError, ValueError):
    reason = "syntax"


class ValidationError(KnotoidError, ValueError):
    reason = "validation"


class NotClassicalError(KnotoidError):
    reason = "not-classical"


class CapExceededError(KnotoidError):
    reason = "cap-exceeded"


class RouteError(KnotoidError, ValueError):
    reason = "route-invalid"


class StaleSiteError(KnotoidError, ValueError):
    reason = "stale-site"


class DiagramError(KnotoidError, ValueError):
    reason = "diagram"
