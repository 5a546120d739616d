"""Exception hierarchy shared by every jordanum module."""


class JordanumError(Exception):
    """Base class for all library errors."""


class ZeroInverse(JordanumError, ZeroDivisionError):
    pass


class NotCoprime(JordanumError, ValueError):
    pass


class ZeroInput(JordanumError, ValueError):
    pass


# a zero radicand is a zero input to the square-root machinery
ZeroRadicand = ZeroInput


class NotRepresentable(JordanumError, ValueError):
    """The requested field cannot be expressed by a descriptor."""


class MalformedSubgroup(JordanumError, ValueError):
    pass


class NotOddPrime(JordanumError, ValueError):
    pass


class UnrealizableVector(JordanumError, ValueError):
    """A property vector violates an implication every field satisfies."""


class MissingOrder(JordanumError, ValueError):
    pass


class NotPrimitiveTag(JordanumError, ValueError):
    pass


class OutOfRange(JordanumError, ValueError):
    pass


class CapExceeded(JordanumError, RuntimeError):
    """Group closure grew past the configured element cap."""


class BadWord(JordanumError, ValueError):
    pass


class BadParameters(JordanumError, ValueError):
    pass


class NotProjectivelyCyclic(JordanumError, ValueError):
    pass


class NoWitnessFound(JordanumError, RuntimeError):
    """A bounded search ran out of candidates."""


class PredicateFalse(JordanumError, ValueError):
    pass


class NoWitness(JordanumError, RuntimeError):
    """No recipe realizes the decision-tree value over the given field."""


class ParseError(JordanumError, ValueError):
    def __init__(self, message, offset=None, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = message
        if offset is not None:
            detail += f" at byte {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class SemanticError(JordanumError, ValueError):
    pass
