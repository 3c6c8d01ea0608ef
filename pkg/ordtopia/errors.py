"""
Exception hierarchy for ordtopia.

Every error raised by the library derives from OrdtopiaError, which is a
ValueError so callers that only catch ValueError keep working.
"""


class OrdtopiaError(ValueError):
    """Base class for all ordtopia errors."""


class IndexOutOfRange(OrdtopiaError):
    """A carrier index is outside 0..n-1."""


class SizeMismatch(OrdtopiaError):
    """Two values live on carriers of different size."""


class NotAPreorder(OrdtopiaError):
    """Relation rows are not reflexive or not transitive."""


class NotATopology(OrdtopiaError):
    """A family of subsets is not a topology on its carrier."""


class InvalidDistance(OrdtopiaError):
    """A distance table breaks an axiom its type promises."""


class CarrierTooLarge(OrdtopiaError):
    """Explicit enumeration was requested above the supported carrier size."""


class NotOneBounded(OrdtopiaError):
    """A base metric has an entry greater than 1."""


class ParamOutOfRange(OrdtopiaError):
    """A numeric parameter lies outside its admissible range."""


class UtilityNotIsotonic(OrdtopiaError):
    """A utility vector breaks x ≾ y ⇒ u(x) ≤ u(y)."""


class UtilityOutOfRange(OrdtopiaError):
    """A utility value lies outside the open interval (0, 1)."""


class IncomparableTails(OrdtopiaError):
    """Two sequence models do not share a tail, so their difference is not finitely supported."""


class SupportExceedsPrefix(OrdtopiaError):
    """A finite permutation moves coordinates beyond the explicit prefix."""


class InvalidPermutation(OrdtopiaError):
    """A mapping is not a bijection of its support."""


class WindowTooSmall(OrdtopiaError):
    """The grading window does not cover both prefixes."""


class InvalidSequence(OrdtopiaError):
    """A tail or prefix does not fit the sequence model."""


class GaugeDomain(OrdtopiaError):
    """A coordinate lies outside the gauge's domain."""


class DuplicateCheck(OrdtopiaError):
    """Two reports being merged carry the same (suite, name)."""


class ConfigError(OrdtopiaError):
    """Invalid run configuration."""


class InvalidReport(OrdtopiaError):
    """A report or report document does not match the schema."""
