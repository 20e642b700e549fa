"""Exception types shared across the library.

The CLI maps these onto exit codes: precision and degeneracy failures
exit with code 1, invalid input (mathematical domain violations included)
exits with code 2.
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class NormalizationError(DomainError):
    """Curve or function input needs normalization first (e.g. non-integral at p)."""


class NonUnitError(DomainError):
    """Inversion of a non-unit (series with zero constant term, the zero function)."""


class PoleError(DomainError):
    """A function required to be regular on a disk has a pole there."""


class PrecisionError(ArithmeticError):
    """Truncation order too small to certify the requested quantity.

    ``needed`` carries a suggested truncation order when one can be estimated.
    """

    def __init__(self, message, needed=None):
        super().__init__(message)
        self.needed = needed


class IndeterminatePolygonError(PrecisionError):
    """All known coefficients vanish; no Newton polygon can be formed."""


class DegenerateOperatorError(ArithmeticError):
    """All candidate determinants vanish (input functions linearly dependent)."""


class SearchExhaustedError(DegenerateOperatorError):
    """No nice index set exists within the allowed derivative range."""
