"""Exception hierarchy shared by every module in the package."""


class MatroidError(Exception):
    """Base class for all errors raised by bcmatroid."""


class AxiomViolation(MatroidError, ValueError):
    pass


class EmptyCircuit(AxiomViolation):
    pass


class ElementNotInGroundSet(MatroidError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class HasLoops(MatroidError, ValueError):
    pass


class NotConnected(MatroidError, ValueError):
    pass


class BadBasepoint(MatroidError, ValueError):
    pass


class OverlappingGroundSets(MatroidError, ValueError):
    pass


class BadParameters(MatroidError, ValueError):
    pass


class TooLarge(MatroidError, ValueError):
    pass


class LengthMismatch(MatroidError, ValueError):
    pass


class InternalInconsistency(MatroidError, AssertionError):
    """Two independent computation routes disagreed."""


class EmptySequence(MatroidError, ValueError):
    pass


class NegativeCoefficients(MatroidError, ValueError):
    pass


class NotStartingAtOne(MatroidError, ValueError):
    pass


class PreconditionViolation(MatroidError, ValueError):
    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class UnknownPredicate(MatroidError, ValueError):
    pass


class ParseError(MatroidError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = source or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
