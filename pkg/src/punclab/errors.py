"""Exception hierarchy shared by all punclab modules."""


class PunclabError(Exception):
    """Base class for every punclab-specific error."""


# field construction and arithmetic
class NotPrime(PunclabError, ValueError):
    pass


class DegreeZero(PunclabError, ValueError):
    pass


class FieldTooLarge(PunclabError, ValueError):
    pass


class DivisionByZero(PunclabError, ZeroDivisionError):
    pass


class MixedFields(PunclabError, ValueError):
    """Operands belong to different field contexts."""


class NotPrimePower(PunclabError, ValueError):
    pass


# generic codes
class LengthMismatch(PunclabError, ValueError):
    pass


class TooFewCodewords(PunclabError, ValueError):
    pass


class RadiusOutOfRange(PunclabError, ValueError):
    pass


class PlanMismatch(PunclabError, ValueError):
    pass


class NTooLarge(PunclabError, ValueError):
    pass


class CodeTooLarge(PunclabError, ValueError):
    """Explicit word storage would exceed the configured cap."""


# Reed-Solomon construction
class DuplicateEvalPoint(PunclabError, ValueError):
    pass


class DegreeOutOfRange(PunclabError, ValueError):
    pass


class WrongCoefficientCount(PunclabError, ValueError):
    pass


class TooLargeToMaterialize(PunclabError, ValueError):
    pass


# deciders and enumerations
class SearchSpaceTooLarge(PunclabError, ValueError):
    pass


class BudgetExceeded(PunclabError, RuntimeError):
    """An exact search ran out of its node/subset budget before finishing.

    Deliberately an error: a truncated exact search must never be reported
    as a verdict.
    """


# bad-tuple machinery
class DuplicateTupleEntry(PunclabError, ValueError):
    pass


class DuplicateWord(PunclabError, ValueError):
    pass


class HypothesisUnmet(PunclabError, ValueError):
    """A standing hypothesis of the sampled construction does not hold."""


class RetriesExhausted(PunclabError, RuntimeError):
    """Rejection sampling failed every allowed attempt."""


class NotSubset(PunclabError, ValueError):
    pass


# parameter validators
class UncertifiedComparison(PunclabError, ArithmeticError):
    """The comparison could not be certified at the maximum precision.

    Raised instead of returning a possibly-wrong boolean.
    """


class FieldSizeTooSmall(PunclabError, ValueError):
    pass


class InvalidDistance(PunclabError, ValueError):
    pass


# experiment harness
class ConfigInvalid(PunclabError, ValueError):
    pass


class IoError(PunclabError, OSError):
    pass


class SchemaVersionMismatch(PunclabError, ValueError):
    pass
