"""Exception hierarchy shared by all modules.

Everything derives from MonoidError so callers can catch one base class.
The CLI maps these onto exit codes: budget overruns exit 2, verification
failures exit 3, every other MonoidError exits 1.
"""


class MonoidError(Exception):
    """Base class for errors raised by this package."""


class InvalidInput(MonoidError, ValueError):
    """Malformed argument: bad flag value, negative element, and so on."""


class InvalidGenerators(InvalidInput):
    """Generator tuple empty, non-positive, or not strictly increasing."""


class DimensionMismatch(InvalidInput):
    """Exponent vectors of different lengths were combined."""


class NotPrimitive(MonoidError, ValueError):
    """Operation requires gcd(generators) = 1."""


class NotMinimal(MonoidError, ValueError):
    """Operation requires a minimally generated tuple."""


class NotAnElement(MonoidError, ValueError):
    """The queried integer does not belong to the monoid."""


class NotARelation(MonoidError, ValueError):
    """Pair of exponent vectors with different images under pi."""


class NotInImage(MonoidError, ValueError):
    """Relation cannot be pulled back: a coordinate would go negative."""


class ShiftBelowThreshold(MonoidError, ValueError):
    """Shift parameter does not satisfy n > r_k^2, so lifting is unsound."""


class BudgetExceeded(MonoidError, RuntimeError):
    """Enumeration count cap or wall-clock deadline hit."""


class VerificationFailed(MonoidError, RuntimeError):
    """Internal consistency check failed; indicates a bug, not bad input."""
