"""Exception types shared across the package."""


class HypermapsError(Exception):
    """Base class for all errors raised by this package."""


class NotABijection(HypermapsError):
    """An image array repeats a value or contains one out of range."""


class DegreeMismatch(HypermapsError):
    """Two permutations of different degrees were combined."""


class ParseError(HypermapsError):
    """Malformed cycle notation."""


class PointOutOfRange(ParseError):
    """A cycle mentions a point outside 1..degree."""


class DuplicatePoint(ParseError):
    """A point appears in more than one position of a cycle expression."""


class GroupFileError(HypermapsError):
    """A group file failed to parse; carries the offending line number."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CapExceeded(HypermapsError):
    """Group closure grew past the configured element cap."""


class NotInvolution(HypermapsError):
    """A triple entry does not have order exactly 2."""


class NotGenerating(HypermapsError):
    """The involution triple fails to generate the whole group."""


class NotPrime(HypermapsError):
    """A parameter that must be prime is not."""


class BadDivisor(HypermapsError):
    """A cyclic-subgroup order does not divide the required group order."""


class InvalidFamilyParams(HypermapsError):
    """Family parameters violate the family's constraints."""


class ParityMismatch(HypermapsError):
    """A catalog triple was requested with the wrong parity of n."""


class VerificationFailure(HypermapsError):
    """A built-in verification assertion failed; names the first violation."""


class InternalError(HypermapsError):
    """An impossible state was reached; indicates an implementation bug."""
