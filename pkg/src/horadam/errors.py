"""Exception hierarchy shared by every module of the package."""


class RecurrenceError(Exception):
    """Base class for all errors raised by :mod:`horadam`."""


class ZeroDenominatorError(RecurrenceError, ZeroDivisionError):
    pass


class NotInvertibleError(RecurrenceError, ArithmeticError):
    """Raised when an element that is not a unit of its ring must be inverted."""

    def __init__(self, ring: str, what: str = "element", value=None):
        self.ring = ring
        self.what = what
        self.value = value
        msg = f"{what} is not invertible in the {ring} ring"
        if value is not None:
            msg += f": {value}"
        super().__init__(msg)


class IncompatibleExtensionError(RecurrenceError, ValueError):
    """Two quadratic-extension elements with different discriminants were combined."""


class DegenerateSpecError(RecurrenceError, ValueError):
    """f or g is zero; those recurrences are excluded by construction."""


class DegenerateDiscriminantError(RecurrenceError):
    """f^2 + 4g vanishes, so the characteristic roots coincide."""


class WrongCaseError(RecurrenceError):
    """A closed form was requested outside the case it is valid for."""


class UnknownSequenceError(RecurrenceError, LookupError):
    def __init__(self, name: str, valid):
        self.name = name
        self.valid = tuple(valid)
        super().__init__(f"unknown sequence {name!r}; valid names: {', '.join(self.valid)}")


class IdentityViolation(RecurrenceError, AssertionError):
    """An identity that must hold exactly produced a nonzero witness."""
