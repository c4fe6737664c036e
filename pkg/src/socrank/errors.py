"""Exception types.  Each carries a short machine-readable ``code``."""


class SocrankError(Exception):
    code = "ERROR"

    def __init__(self, code: str | None = None, message: str = ""):
        if code is not None:
            self.code = code
        super().__init__(f"{self.code}: {message}" if message else self.code)


class ValidationError(SocrankError, ValueError):
    """Malformed ranking: EMPTY_CLASS, DUPLICATE_COALITION, FOREIGN_MEMBER, EMPTY_COALITION."""


class LengthMismatchError(SocrankError, ValueError):
    code = "LENGTH_MISMATCH"


class UnknownSrsError(SocrankError, KeyError):
    code = "UNKNOWN_SRS"

    def __str__(self):
        return Exception.__str__(self)


class UnknownAxiomError(SocrankError, KeyError):
    code = "UNKNOWN_AXIOM"

    def __str__(self):
        return Exception.__str__(self)


class NotDisjointError(SocrankError, ValueError):
    code = "NOT_DISJOINT"


class NotASumError(SocrankError, ValueError):
    code = "NOT_A_SUM"


class BoundsTooLargeError(SocrankError, ValueError):
    code = "BOUNDS_TOO_LARGE"


class ParseError(SocrankError, ValueError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(None, f"line {line}, column {column}: {message}")
