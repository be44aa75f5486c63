"""Exception types shared across the package."""

from __future__ import annotations


class LiestructError(Exception):
    """Base class for all errors raised by this package."""


class JacobiError(LiestructError):
    """A bracket table fails the Jacobi identity.

    Carries the first offending basis triple (i, j, k) and the defect vector
    [[e_i,e_j],e_k] + [[e_k,e_i],e_j] + [[e_j,e_k],e_i].
    """

    def __init__(self, triple, defect):
        self.triple = tuple(triple)
        self.defect = tuple(defect)
        super().__init__(
            "Jacobi identity fails on basis triple %r: defect %s"
            % (self.triple, [str(x) for x in self.defect])
        )


class NotAnIdealError(LiestructError):
    """A subspace passed where an ideal is required is not one.

    Carries a witness pair: the basis index x and an ideal basis vector v
    with [e_x, v] outside the subspace.
    """

    def __init__(self, basis_index, vector):
        self.basis_index = basis_index
        self.vector = tuple(vector)
        super().__init__(
            "not an ideal: [e_%d, %s] falls outside the subspace"
            % (basis_index, [str(x) for x in vector])
        )


class PreconditionError(LiestructError):
    """A documented mathematical hypothesis of an operation is not met."""


class SeparatingElementError(LiestructError):
    """The deterministic separating-element search was exhausted."""


class TruncationError(LiestructError):
    """A jet computation would overflow the truncation order."""


class SpecParseError(LiestructError):
    """An algebra-description string could not be parsed.

    ``position`` is the character offset at which parsing failed.
    """

    def __init__(self, message, position):
        self.position = position
        super().__init__("%s (at position %d)" % (message, position))
