"""Exceptions shared across the package."""


class SkeinError(Exception):
    """Base class for all errors raised by skeinvol."""


class Inadmissible(SkeinError):
    """A color triple violates the admissibility conditions.

    Raised by the weight functions that are undefined on inadmissible
    triples (theta_weight, vertex_weight).  Evaluators catch this and map
    it to the value 0, which is what an inadmissible vertex contributes.
    """


class DegenerateTheta(SkeinError):
    """Theta of an admissible triple came out exactly zero.

    This cannot happen for an admissible triple at an odd level (every
    factor [k] with 0 < k < r is nonzero), so hitting it means the inputs
    were corrupted.  Kept as a loud guard instead of a silent 1/0.
    """


class BudgetExceeded(SkeinError):
    """A sum over colorings (or an exact-arithmetic job) is larger than the
    configured work budget."""


class NotTrivalent(SkeinError):
    """A vertex was required to have degree 3 and does not."""


class NotPlanar(SkeinError):
    """The rotation system fails the Euler check V - E + F = 2."""


class NotTriangle(SkeinError):
    """A face was required to have exactly 3 sides and does not."""


class LowValence(SkeinError):
    """Desingularization was asked to process a vertex of valence < 3."""


class IllConditioned(SkeinError):
    """A least-squares design matrix is (numerically) degenerate."""
