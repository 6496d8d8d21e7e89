"""Exception types shared across the package."""


class EllfrobError(Exception):
    """Base class for all package errors."""


class NonUnitError(EllfrobError):
    """Inversion of a p-adic non-unit was attempted."""


class InexactDivision(EllfrobError):
    """Division by a power of p that does not divide the value exactly."""


class PrecisionUnderflow(EllfrobError):
    """Tracked precision of a required quantity dropped below 1."""


class InsufficientPrecision(EllfrobError):
    """Delivered precision does not meet the bound needed for exact recovery."""


class NoConsistentSign(EllfrobError):
    """Neither functional-equation sign is consistent with the data."""


class SignAmbiguity(EllfrobError):
    """Both functional-equation signs are consistent; refusing to guess."""


class WeilBoundViolation(EllfrobError):
    """A recovered coefficient exceeds the Weil bound binom(m,l)*p^l."""


class RootModulusFailure(EllfrobError):
    """A reciprocal root of the recovered polynomial is off the circle |z| = p."""


class UnexpectedDimension(EllfrobError):
    """Lattice basis has a different size than expected for the family."""

    def __init__(self, got, expected):
        super().__init__(f"lattice basis has {got} monomials, expected {expected}")
        self.got = got
        self.expected = expected


class RelationOutOfSpace(EllfrobError):
    """A lattice relation produced a monomial outside the ambient span."""


class RejectionExhausted(EllfrobError):
    """Random family generation hit the rejection cap without a valid curve."""


class NoStabilization(EllfrobError):
    """No denominator exponent below the cap clears the series tail."""


class ExceptionalResonance(EllfrobError):
    """A finite-place cokernel solve was singular (contradicts nilpotency)."""


class SingularBasisImages(EllfrobError):
    """Images of the lattice basis are dependent in the connection cokernel."""


class DegreeConditionViolated(EllfrobError):
    """Input polynomial degrees violate a precondition."""


class CurveFileError(EllfrobError):
    """Malformed curve file; carries the offending line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
