"""Exception types shared across the package."""

__all__ = [
    "HpisoError",
    "DomainError",
    "PoleError",
    "AmbiguousClassification",
    "IdentityError",
    "GeneratorExhausted",
    "DegreeError",
    "GridMismatch",
    "BranchError",
    "WrongClass",
    "ZeroCodimension",
    "NotCertified",
    "IdentityAmbiguity",
]


class HpisoError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HpisoError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(HpisoError, ZeroDivisionError):
    """Evaluation hit the pole of a Moebius map (never for legal inputs)."""


class AmbiguousClassification(HpisoError):
    """Trace test and fixed-point cross-check disagree at the given tolerance."""


class IdentityError(HpisoError, ValueError):
    """The identity map was passed where a non-identity automorphism is required."""


class GeneratorExhausted(HpisoError, IndexError):
    """A zero sequence cannot produce as many terms as requested."""


class DegreeError(HpisoError, ValueError):
    """Polynomial degree is too high for the sampling grid (aliasing guard)."""


class GridMismatch(HpisoError, ValueError):
    """Boundary grids of the operands have different sizes."""


class BranchError(HpisoError, ArithmeticError):
    """The fractional-power radicand left its guaranteed branch domain.

    Indicates a bug or an invalid automorphism, never a legal input.
    """


class WrongClass(HpisoError, ValueError):
    """The automorphism is of the wrong conjugacy class for this construction."""


class ZeroCodimension(HpisoError, ValueError):
    """The isometry is surjective (codimension 0), so the question is void."""


class NotCertified(HpisoError, ValueError):
    """The operation needs a convergence certificate that is not available."""


class IdentityAmbiguity(HpisoError):
    """Identity symbol with codimension > 1: search was inconclusive.

    Distinct from a definite "not equivalent": the conjugator coset here is
    the whole automorphism group and the finite search found no witness.
    """
