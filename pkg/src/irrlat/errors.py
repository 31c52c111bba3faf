"""Exception hierarchy shared by all modules."""


class IrrlatError(Exception):
    """Base class; the CLI maps every subclass to exit code 2."""


class UsageError(IrrlatError):
    pass


# character arithmetic
class RankMismatch(IrrlatError):
    pass


class NotACharacter(IrrlatError):
    pass


class OutOfSupportedRange(IrrlatError):
    pass


class TwistInCharZero(IrrlatError):
    pass


class UnsupportedType(IrrlatError):
    pass


class Unresolved(IrrlatError):
    """An irreducible character outside the decidable range was needed."""


# twist language
class TwistSyntaxError(IrrlatError):
    def __init__(self, message: str, text: str, offset: int, expected: frozenset[str] = frozenset()):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.line, self.column = line, col
        exp = ", ".join(sorted(self.expected))
        detail = f" (expected one of: {exp})" if exp else ""
        super().__init__(f"{message} at line {line}, column {col} (offset {offset}){detail}")


class UnboundVariable(IrrlatError):
    pass


class AmbiguousRows(IrrlatError):
    pass


# catalog
class ParseError(IrrlatError):
    pass


class DanglingReference(IrrlatError):
    pass


class DuplicateId(IrrlatError):
    pass


class DimensionMismatch(IrrlatError):
    pass


class UnknownId(IrrlatError):
    pass


class ConditionViolated(IrrlatError):
    pass


class MissingData(IrrlatError):
    pass
