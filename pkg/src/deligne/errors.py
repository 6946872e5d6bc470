"""Exception hierarchy shared by every module."""


class DeligneError(Exception):
    pass


class ConfigError(DeligneError, ValueError):
    pass


class UnknownGenerator(DeligneError, ValueError):
    pass


class TypeMismatch(DeligneError, TypeError):
    pass


class NegativeLetter(DeligneError, ValueError):
    pass


class BallTooLarge(DeligneError):
    pass


class NotParallel(DeligneError, ValueError):
    pass


class NotAdjacent(DeligneError, ValueError):
    pass


class HypothesisViolation(DeligneError, ValueError):
    pass


class TypePatternMismatch(DeligneError, ValueError):
    pass


class SameType(DeligneError, ValueError):
    pass


class NotInParabolic(DeligneError, ValueError):
    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"word {index} is not in its parabolic subgroup")


class NotClosed(DeligneError, ValueError):
    pass


class IndexOutOfRange(DeligneError, IndexError):
    pass
