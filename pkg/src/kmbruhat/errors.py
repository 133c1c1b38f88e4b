"""Exception types raised by the library."""

from __future__ import annotations


class KacMoodyError(Exception):
    """Base class for every error raised by this package."""


class GCMError(KacMoodyError, ValueError):
    """A matrix violates one of the generalized Cartan matrix axioms.

    ``i`` and ``j`` are 0-based; the message uses 1-based positions.
    """

    axiom = ""

    def __init__(self, i: int, j: int, detail: str = ""):
        self.i = i
        self.j = j
        msg = f"{self.axiom} at ({i + 1},{j + 1})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class DiagonalNotTwo(GCMError):
    axiom = "diagonal entry must be 2"


class PositiveOffDiagonal(GCMError):
    axiom = "off-diagonal entry must be <= 0"


class AsymmetricZero(GCMError):
    axiom = "a_ij = 0 must imply a_ji = 0"


class InvalidRealization(KacMoodyError, ValueError):
    """Explicit realization vectors do not form a root datum for the matrix."""


class DimensionMismatch(KacMoodyError, ValueError):
    pass


class NotAWeylMatrix(KacMoodyError, ValueError):
    """Descent stripping could not reduce a matrix to the identity."""


class NotARealRoot(KacMoodyError, ValueError):
    pass


class PreconditionViolated(KacMoodyError, ValueError):
    pass


class NotInTitsCone(KacMoodyError, ValueError):
    """Dominance could not be established within the step cap.

    ``trace`` holds the coweights visited by the greedy procedure.
    """

    def __init__(self, message: str, trace: tuple = ()):
        super().__init__(message)
        self.trace = trace


class NegativeZeroLevel(KacMoodyError, ValueError):
    """``beta[0]`` was requested for a negative root; negate it first."""


class ParseError(KacMoodyError, ValueError):
    pass


class RankNotTwo(KacMoodyError, ValueError):
    pass
