"""Exception hierarchy shared by every engine."""


class GateSwitchError(Exception):
    """Base class for all library errors."""


class InvalidInput(GateSwitchError, ValueError):
    """Malformed or out-of-range input (maps to CLI exit code 2)."""


class NotAnAscent(InvalidInput):
    pass


class InvalidSequence(GateSwitchError, ValueError):
    def __init__(self, report):
        super().__init__(report.message)
        self.report = report


class DegenerateConfiguration(InvalidInput):
    """Point configuration violates general position."""


class BudgetExceeded(GateSwitchError, RuntimeError):
    """A computation would exceed the configured resource budget (exit code 3)."""
