"""Exception hierarchy shared across the package.

Every domain failure derives from DissectionError so the CLI can map any of
them to a single nonzero exit code while printing the class name.
"""


class DissectionError(Exception):
    """Base class for all domain errors."""


class NotADissection(DissectionError):
    """Input triangles do not form a classical dissection of a square."""


class NotDrawingOrder(DissectionError):
    """A vertex order assigns a negative degree of freedom somewhere."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"alpha would be negative at vertex {vertex!r}")


class Reducible(DissectionError):
    """Two constraints share two or more vertices, so no generic drawing exists."""


class PeelingStuck(DissectionError):
    """Valence peeling halted with interior vertices left (internal inconsistency)."""


class IdenticallyParallel(DissectionError):
    """Two constraint lines are parallel as rational functions; not drawable this way."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"constraint lines through {vertex!r} are identically parallel")


class DenominatorVanishes(DissectionError):
    """A coordinate denominator evaluates to zero at the given parameters."""

    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"denominator vanishes at vertex {vertex!r}")


class DrawabilityUndecided(DissectionError):
    """Sampling failed to produce a generic drawing; drawability remains open."""


class NotDrawable(DissectionError):
    """No drawing order / generic drawing could be produced upstream."""


class NotHyper(DissectionError):
    """The realizable-area locus is not a hypersurface; no single defining polynomial."""


class VerificationFailed(DissectionError):
    """A mandatory post-computation identity check failed (internal bug guard)."""


class NotMod2(DissectionError):
    """A polynomial expected to have all-even coefficients has an odd one."""


class NotHomogeneous(DissectionError):
    """Operation requires a homogeneous polynomial."""


class DegenerateFrame(DissectionError):
    """The three frame corners of a drawing are collinear; no normalizing map."""


class SchemaError(DissectionError):
    """Document does not conform to the JSON schema."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"at {path}: {message}")


class DuplicateId(DissectionError):
    """Two entities in a document carry the same identifier."""
