"""Exception hierarchy shared by all transforms."""


class SridgeError(Exception):
    """Base class for errors raised by sridge."""


class DomainError(SridgeError, ValueError):
    """An argument lies outside the domain of the operation (bad degree, spin, angle...)."""


class FormatError(SridgeError, ValueError):
    """Array shape or file layout does not match what the operation expects."""


class PreconditionError(SridgeError, ValueError):
    """Input is well formed but violates a documented precondition."""


class InadmissibleError(PreconditionError):
    """Signal carries energy on the (l + s odd) subspace that the Radon transform annihilates.

    Attributes:
        odd_fraction: share of the squared norm held by the odd-parity coefficients.
    """

    def __init__(self, odd_fraction, message=None):
        self.odd_fraction = float(odd_fraction)
        if message is None:
            message = (
                f"input has odd-parity energy fraction {self.odd_fraction:.3e}; "
                "cannot invert the Radon transform exactly (use policy='project' to discard it)"
            )
        super().__init__(message)
