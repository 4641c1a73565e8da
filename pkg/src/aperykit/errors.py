"""Exception types shared across the package.

Input-validation problems derive from ValueError so callers (and the CLI)
can treat them uniformly as user errors; InternalInvariantError marks a
broken structural guarantee, i.e. a bug, and is never raised on bad input.
"""


class NotAMemberError(ValueError):
    """An operation needed a nonzero monoid element and got something else."""


class NotMinimalError(ValueError):
    """A generating set contains a generator reachable from the others."""


class LengthMismatchError(ValueError):
    """An exponent vector does not match the ambient variable count."""


class InvalidPermutationError(ValueError):
    """An inner-ordering permutation does not cover the expected indices."""


class InvalidLambdaError(ValueError):
    """A block-ordering Lambda selection is malformed."""


class ConeMismatchError(ValueError):
    """A generator lies outside the rational cone spanned by Lambda."""

    def __init__(self, generator, message=None):
        self.generator = tuple(generator)
        super().__init__(message or f"generator {self.generator} is not in the cone of Lambda")


class OrderNotEliminationError(ValueError):
    """A basis built without an elimination ordering was used for classification."""


class BadAxesError(ValueError):
    """A staircase rendering request does not leave exactly two free axes."""


class ScanLimitError(ValueError):
    """A scan would exceed the APERYKIT_MAX_SCAN guard (pathological input)."""


class InternalInvariantError(RuntimeError):
    """A structural guarantee failed; indicates a bug, never bad user input."""
