class CharacterParseError(ValueError):
    """Malformed character or Weyl element text."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured size guard."""


class OracleFailure(RuntimeError):
    """The brute-force decomposition hit a negative multiplicity."""
