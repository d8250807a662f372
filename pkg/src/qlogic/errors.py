"""Exception hierarchy shared by the library and the CLI."""


class QLogicError(Exception):
    pass


class ParseError(QLogicError):
    """Raised by the formula parser; ``position`` is a character offset."""

    def __init__(self, position: int, message: str) -> None:
        super().__init__(f"at offset {position}: {message}")
        self.position = position
        self.message = message


class DimensionError(QLogicError, ValueError):
    pass


class InvariantError(QLogicError, ValueError):
    """A matrix or vector failed a structural check (Hermitian, idempotent, normalized)."""


class ScenarioSyntaxError(QLogicError):
    """Scenario source is not well-formed JSON of the expected shape."""


class ScenarioError(QLogicError):
    """Scenario is well-formed but violates an invariant."""


class EvaluationError(QLogicError):
    """Unbound atom, wrong input kind, or a value outside a semantics' domain."""
