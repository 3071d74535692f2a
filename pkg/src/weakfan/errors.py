"""Exception types shared across the package."""

from __future__ import annotations


class WeakFanError(Exception):
    """Base class for every structured error raised by this package."""


class DimensionMismatchError(WeakFanError):
    """Operands live in spaces of different dimensions."""


class NotSymmetricError(WeakFanError):
    """A symmetric matrix was required."""


class NotIntegralError(WeakFanError):
    """Integer entries were required."""


class NotInvertibleError(WeakFanError):
    """A square matrix was singular where an inverse was required."""


class NotInvariantError(WeakFanError):
    """A map does not preserve the subspaces needed for an induced map."""


class DegenerateLatticeError(WeakFanError):
    """The bilinear form has a nontrivial radical."""


class LatticeMismatchError(WeakFanError):
    """Operands are defined over different lattices."""


class NotIsometryError(WeakFanError):
    """A matrix fails the (infinitesimal) isometry identity for the form."""


class NotNilpotentError(WeakFanError):
    """An operator required to be nilpotent is not."""


class NotUnipotentError(WeakFanError):
    """An automorphism required to be unipotent is not."""


class IndexTooLargeError(WeakFanError):
    """Nilpotency index exceeds what weight-2 monodromy permits."""


class BlockFormError(WeakFanError):
    """block_form requires a nonzero operator with vanishing square."""


class NotWInvariantError(WeakFanError):
    """The operator does not preserve the base filtration."""


class NonSimplicialError(WeakFanError):
    """Cone generators are linearly dependent."""


class InteriorDependenceError(WeakFanError):
    """Two interior sample points of a cone produced different weight
    filtrations.  Carries both offending coefficient tuples."""

    def __init__(self, first, second, message=""):
        self.first = tuple(first)
        self.second = tuple(second)
        super().__init__(
            message
            or f"weight filtration differs between interior samples {self.first} and {self.second}"
        )


class FirstConditionViolatedError(WeakFanError):
    """The period vector is not isotropic, so no exp(zN)-translate can be."""


class DescriptionError(WeakFanError):
    """A degeneration description file failed to parse."""


class UnknownNameError(DescriptionError):
    """A description refers to an operator or cone that was never defined."""
