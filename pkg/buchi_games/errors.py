"""Иерархия исключений библиотеки.

Ошибки входных данных наследуются от `InputError` (и `ValueError`), CLI
переводит их в код возврата 1. Нарушения внутренних инвариантов — от
`InvariantViolation` (и `RuntimeError`), им соответствует код 2.
"""


class GameError(Exception):
    """Базовое исключение для всех ошибок пакета."""


class InputError(GameError, ValueError):
    """Ошибка во входных данных или недопустимая операция над графом."""


class InvariantViolation(GameError, RuntimeError):
    """Нарушен внутренний инвариант (самопроверка не прошла)."""


class InvalidVertexError(InputError):
    def __init__(self, v: int, n: int) -> None:
        super().__init__(f"vertex id {v} is out of range [0, {n})")
        self.v = v
        self.n = n


class ZeroOutdegreeError(InputError):
    def __init__(self, v: int) -> None:
        super().__init__(f"vertex {v} has no outgoing edge")
        self.v = v


class DuplicateEdgeError(InputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u}, {v}) is listed more than once")
        self.u = u
        self.v = v


class AlreadyDeadError(InputError):
    def __init__(self, v: int) -> None:
        super().__init__(f"vertex {v} is already removed")
        self.v = v


class NotPlayer1EdgeError(InputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u}, {v}) does not start at a player-1 vertex")
        self.u = u
        self.v = v


class LastOutedgeError(InputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u}, {v}) is the last outgoing edge of {u}")
        self.u = u
        self.v = v


class NoSuchEdgeError(InputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u}, {v}) does not exist")
        self.u = u
        self.v = v


class EdgeExistsError(InputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"edge ({u}, {v}) already exists")
        self.u = u
        self.v = v


class UpdateModeError(InputError):
    """Смешаны вставки и удаления рёбер на одном графе/решателе."""

    def __init__(self, current: str, requested: str) -> None:
        super().__init__(
            f"graph is in {current} mode, {requested} updates are not allowed"
        )
        self.current = current
        self.requested = requested


class StrategyUndefinedError(InputError):
    def __init__(self, v: int) -> None:
        super().__init__(f"strategy is undefined at player-1 vertex {v}")
        self.v = v


class TooLargeError(InputError):
    """Экземпляр слишком велик для переборного оракула."""


class InfeasibleDensityError(InputError):
    def __init__(self, n: int, target_m: int) -> None:
        super().__init__(
            f"cannot place {target_m} distinct edges on {n} vertices (max {n * n})"
        )
        self.n = n
        self.target_m = target_m


class GameSyntaxError(InputError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class MixedTraceError(InputError):
    """Трасса содержит и вставки, и удаления (или не совпадает с режимом)."""


class TraceEventError(InputError):
    """Ошибка решателя при применении события трассы с номером `index`."""

    def __init__(self, index: int, cause: InputError) -> None:
        super().__init__(f"trace event #{index}: {cause}")
        self.index = index
        self.cause = cause
