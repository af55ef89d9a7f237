class CentralSetsError(Exception):
    """Base class for all package errors."""


class IndexOutOfRange(CentralSetsError):
    pass


class NonAssociative(CentralSetsError):
    def __init__(self, i, j, k):
        super().__init__(f"associativity fails at triple ({i}, {j}, {k})")
        self.triple = (i, j, k)


class ElementOutOfRange(CentralSetsError):
    pass


class EmptyInput(CentralSetsError):
    pass


class BadBounds(CentralSetsError):
    pass


class ZeroDivisor(CentralSetsError):
    pass


class NodeNotInTree(CentralSetsError):
    pass


class NotAnExtension(CentralSetsError):
    pass


class NoStar(CentralSetsError):
    pass


class UndefinedAt(CentralSetsError):
    def __init__(self, index):
        super().__init__(f"sequence table has no value at index {index}")
        self.index = index


class DomainTooSmall(CentralSetsError):
    pass


class VerificationFailed(CentralSetsError):
    def __init__(self, detail, letter=None):
        super().__init__(detail)
        self.letter = letter


class SearchExhausted(CentralSetsError):
    def __init__(self, detail, diagnostics=None):
        super().__init__(detail)
        self.diagnostics = diagnostics or {}


class BudgetExceeded(CentralSetsError):
    def __init__(self, detail, partial=None):
        super().__init__(detail)
        self.partial = partial


class TooLarge(CentralSetsError):
    pass


class ConventionMismatch(CentralSetsError):
    pass


class ParseError(CentralSetsError):
    def __init__(self, detail, line=None, col=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(detail + loc)
        self.line = line
        self.col = col


class InvariantViolation(CentralSetsError):
    def __init__(self, invariant, detail=""):
        super().__init__(f"invariant '{invariant}' violated" + (f": {detail}" if detail else ""))
        self.invariant = invariant
