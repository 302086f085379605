"""Exception types shared across the package."""


class Mto1Error(Exception):
    """Base class for every error raised by this package."""


# --- field construction ---

class NotPrime(Mto1Error):
    pass


class DegreeZero(Mto1Error):
    pass


class SizeCapExceeded(Mto1Error):
    pass


# --- element arithmetic ---

class DivisionByZero(Mto1Error, ZeroDivisionError):
    pass


class ZeroToNegativePower(Mto1Error, ZeroDivisionError):
    pass


class WrongCharacteristic(Mto1Error):
    pass


class EvenCharacteristic(Mto1Error):
    pass


class ZeroInput(Mto1Error):
    pass


# --- map specifications and derived data ---

class PreconditionViolated(Mto1Error):
    pass


class NormMismatch(PreconditionViolated):
    pass


class DegenerateAB(PreconditionViolated):
    pass


class MOutOfRange(Mto1Error):
    pass


class ValueNotInSubfield(Mto1Error):
    pass


class IndivisibleExponent(Mto1Error):
    pass


# --- closed-form classifiers ---

class LeadingZero(Mto1Error):
    pass


class ZeroLeading(LeadingZero):
    pass


class OutOfScope(Mto1Error):
    """The asked question is not covered by any implemented criterion."""


# --- inverses and involutions ---

class DegreeTooHigh(Mto1Error):
    pass


class NoMatchingRow(Mto1Error):
    pass


class NotAPermutation(Mto1Error):
    pass


class NotInjective(Mto1Error):
    pass


class NotTwoToOne(Mto1Error):
    pass


class FibersNotTranslations(Mto1Error):
    pass


class NoTranslationInvolution(Mto1Error):
    pass
