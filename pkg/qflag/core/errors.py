"""
Exception hierarchy for the pure core.
"""


class QFlagError(ValueError):
    """Base class for every domain error raised by qflag."""


class OrthogonalityError(QFlagError):
    """Roots of an orthocell are duplicated or not pairwise orthogonal."""


class CellError(QFlagError):
    """An orthocell lacks a property the operation requires."""


class NonDivisibleError(QFlagError):
    """A Laurent polynomial quotient does not exist."""


class ZeroDivisionScalarError(QFlagError, ZeroDivisionError):
    """Division by the zero scalar."""


class DependentBasisError(QFlagError):
    """A basis handed to express is linearly dependent."""


class RankDeficiencyError(QFlagError):
    """The e-vectors of a level pair span less than D_{n;i,j}."""


class NotInSpanError(QFlagError):
    """A vector lies outside the subspace an R-map is defined on."""


class GeneratorError(QFlagError):
    """A generator refers to a root that is not simple."""
