"""Exception hierarchy shared by all nilgraph modules."""


class NilgraphError(Exception):
    pass


class GraphError(NilgraphError, ValueError):
    """Invalid graph data (self-loop, repeated edge, label out of range)."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class SingularMatrix(NilgraphError, ArithmeticError):
    pass


class EmptySystem(NilgraphError):
    pass


class UnsupportedRegime(NilgraphError):
    """No closed form is available for this parameter combination."""


class UnknownFamily(NilgraphError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown family"


class QTooSmall(NilgraphError, ValueError):
    pass


class TheoremViolation(NilgraphError):
    """A certificate of the deletion ladder failed at step ``l``."""

    def __init__(self, l: int, reason: str, report=None):
        self.l = l
        self.reason = reason
        self.report = report
        super().__init__(f"certificate failed at l={l}: {reason}")
