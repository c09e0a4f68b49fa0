"""Exception hierarchy.

Every mathematical precondition failure derives from :class:`PreconditionError`
and carries a stable machine-readable ``code`` that the CLI reports.
"""


class PreconditionError(ValueError):
    code = "precondition"


class NoUnitPivot(PreconditionError):
    code = "no-unit-pivot"


class DuplicateAbscissa(PreconditionError):
    code = "duplicate-abscissa"


class SingularWeight(PreconditionError, ZeroDivisionError):
    code = "singular-weight"


class DegenerateRapidities(PreconditionError, ZeroDivisionError):
    code = "degenerate-rapidities"


class NotBetheRoots(PreconditionError):
    code = "not-bethe-roots"


class PoleAtCandidate(PreconditionError, ZeroDivisionError):
    code = "pole-at-candidate"


class NoConvergence(PreconditionError):
    code = "no-convergence"


class WindowTooSmall(PreconditionError):
    code = "window-too-small"


class DivisionByZeroVariable(PreconditionError, ZeroDivisionError):
    code = "division-by-zero-variable"


class DegenerateMiwaVariables(PreconditionError):
    code = "degenerate-miwa-variables"
