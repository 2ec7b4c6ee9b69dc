"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class PolygonParseError(ValueError):
    """A polygon file could not be parsed.

    ``location`` is a human-readable position such as ``"line 3"`` or
    ``"offset 17"``.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class PolygonInvariantError(ValueError):
    """A vertex list violates a convex-polygon invariant.

    ``invariant`` names the violated rule, ``index`` the offending vertex
    (``None`` when the violation is global, e.g. too few vertices).
    """

    def __init__(self, invariant, message, index=None):
        self.invariant = invariant
        self.index = index
        where = "" if index is None else f" (vertex {index})"
        super().__init__(f"{invariant} violated{where}: {message}")
