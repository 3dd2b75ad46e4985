"""Exception hierarchy for the cburr package.

Everything raised deliberately by this package derives from ``CBurrError``,
so callers can catch one type at the boundary. Subclasses distinguish
parameter problems, data problems and numeric failures because the CLI maps
them to different exit codes.
"""


class CBurrError(Exception):
    """Base class for all cburr errors."""


class ParameterDomainError(CBurrError, ValueError):
    """A parameter or evaluation point violates its admissible domain."""


class SupportExhaustedError(CBurrError, ValueError):
    """Operation requested beyond the support (e.g. hazard where survival is 0)."""


class NonNormalizableError(CBurrError, ValueError):
    """The requested parameters do not yield a normalizable distribution."""


class GenerativeUnsupportedError(CBurrError, ValueError):
    """The minimum-of-shocks sampler is undefined for a negative shift rate."""


class MomentNonexistenceError(CBurrError, ValueError):
    """A requested moment does not exist for these parameters.

    Carries ``inequality``, the violated existence condition, as text.
    """

    def __init__(self, message, inequality=None):
        super().__init__(message)
        self.inequality = inequality


class SeriesTruncationError(CBurrError, RuntimeError):
    """A series did not converge within the allotted terms.

    Carries the partial sum and the last term magnitude for diagnosis.
    """

    def __init__(self, message, partial_sum=None, last_term=None, terms=None):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.last_term = last_term
        self.terms = terms


class TailExhaustedError(CBurrError, ValueError):
    """Survival mass underflowed; conditional tail quantities are meaningless."""


class NumericError(CBurrError, RuntimeError):
    """A numeric routine failed to converge; message carries diagnostics."""


class FitFailureError(CBurrError, RuntimeError):
    """Every optimization start diverged. ``diagnostics`` lists per-start info."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or []


class InsufficientDataError(CBurrError, ValueError):
    """Not enough data to perform the requested computation."""


class ParseError(CBurrError, ValueError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number


class EmptyInputError(CBurrError, ValueError):
    """Input contained no usable records."""
