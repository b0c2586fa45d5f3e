"""Exception hierarchy shared by every circmem module."""


class CircmemError(Exception):
    """Base class for all circmem errors."""


class InvalidRow(CircmemError, ValueError):
    pass


class EmptyRow(InvalidRow):
    pass


class NonZeroDiagonal(InvalidRow):
    pass


class WeightOutOfRange(InvalidRow):
    pass


class SizeMismatch(CircmemError, ValueError):
    pass


class InvalidPermutation(CircmemError, ValueError):
    pass


class MixedSizes(CircmemError, ValueError):
    pass


class SizeTooLarge(CircmemError):
    def __init__(self, n: int, cap: int, method: str):
        self.n = n
        self.cap = cap
        self.method = method
        super().__init__(
            f"n={n} exceeds the {method} enumeration cap of {cap} "
            f"(2^{n} states); pass an explicit override to run it anyway"
        )


class IntegrityError(CircmemError, RuntimeError):
    """An internal consistency check failed (never expected in a correct build)."""


class RowSumUnsatisfiable(CircmemError):
    pass


class ParseError(CircmemError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at character {position})")
