"""Exception hierarchy shared across the package."""

from __future__ import annotations


class ArenaError(Exception):
    """Base class for all package errors."""


class ConstraintViolation(ArenaError, ValueError):
    """A payoff quadruple does not define a prisoner's dilemma."""

    def __init__(self, constraint: str, message: str) -> None:
        super().__init__(message)
        self.constraint = constraint


class StrategyFault(ArenaError):
    """A strategy's decision rule failed during a match."""

    def __init__(self, message: str, context: tuple | None = None) -> None:
        super().__init__(message)
        self.context = context

    def __reduce__(self):
        return (self.__class__, (self.args[0], self.context))

    def __str__(self) -> str:
        return self.args[0]


class LengthUnknown(StrategyFault):
    """A strategy needs the match length but the match has none (prob_end mode)."""


class KeyMissing(StrategyFault, KeyError):
    """A lookup table has no entry for a reachable state."""


class EmptyArchive(ArenaError, ValueError):
    pass


class NonPositiveFitness(ArenaError, ValueError):
    pass


class DegenerateFitness(ArenaError, ZeroDivisionError):
    pass


class ConfigError(ArenaError):
    """Base for configuration problems; the CLI maps these to exit code 2."""


class UnknownStrategy(ConfigError, KeyError):
    def __init__(self, name: str, suggestion: str | None = None) -> None:
        msg = f"unknown strategy {name!r}"
        if suggestion:
            msg += f"; did you mean {suggestion!r}?"
        super().__init__(msg)
        self.name = name
        self.suggestion = suggestion

    def __str__(self) -> str:
        return self.args[0]


class InvalidValue(ConfigError, ValueError):
    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"invalid value for {field}: {message}")
        self.field = field


class IoFailure(ArenaError, OSError):
    pass
