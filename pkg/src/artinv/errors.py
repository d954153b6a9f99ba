"""Exception types shared across the package.

The CLI maps these to exit codes: InputError subclasses exit 1,
CapExceededError exits 2, InternalInvariantError exits 3.
"""
from __future__ import annotations

__all__ = [
    "ArtinvError",
    "InputError",
    "PolyParseError",
    "UnknownVariableError",
    "BadCoefficientError",
    "ArityMismatchError",
    "ContextMismatchError",
    "AlgebraMismatchError",
    "NotArtinianError",
    "NotLocalError",
    "NotHomogeneousError",
    "NotDegreeOneError",
    "NotMonomialIdealError",
    "NotFiniteFieldError",
    "FiniteFieldUnsupportedError",
    "UnknownIdealNameError",
    "CapExceededError",
    "InternalInvariantError",
]


class ArtinvError(Exception):
    """Base class for every error raised by this package."""


class InputError(ArtinvError):
    """Invalid user input: parse failures or unusable presentations."""


class PolyParseError(InputError):
    """Syntax error in a polynomial source string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(PolyParseError):
    """A name in a polynomial source is not a declared variable."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r}", position)
        self.name = name


class BadCoefficientError(PolyParseError):
    """A coefficient literal is invalid over the chosen field."""


class ArityMismatchError(ArtinvError):
    """Operands have different numbers of variables or indeterminates."""


class ContextMismatchError(ArtinvError):
    """Polynomials from different rings were combined."""


class AlgebraMismatchError(ArtinvError):
    """Vectors or subspaces from different algebras were combined."""


class NotArtinianError(InputError):
    """The quotient is infinite-dimensional; carries one failing variable."""

    def __init__(self, variable: str):
        super().__init__(
            f"quotient is not artinian: no leading-monomial pure power of {variable!r}"
        )
        self.variable = variable


class NotLocalError(InputError):
    """The algebra is not local, so local-only invariants are undefined."""


class NotHomogeneousError(InputError):
    """A graded-only operation was applied to a non-homogeneous presentation."""


class NotDegreeOneError(InputError):
    """The supplied element is not supported on the degree-one basis."""


class NotMonomialIdealError(InputError):
    """A monomial-only criterion was applied to a non-monomial ideal."""


class NotFiniteFieldError(InputError):
    """An exhaustive enumeration was requested over an infinite field."""


class FiniteFieldUnsupportedError(InputError):
    """A generic-coefficient computation was requested over a finite field."""


class UnknownIdealNameError(InputError):
    """A named ideal is not registered in the presentation."""


class CapExceededError(ArtinvError):
    """An enumeration or dimension exceeded the configured cap."""


class InternalInvariantError(ArtinvError):
    """A self-check failed; indicates a bug, never bad input."""
