"""Exception hierarchy shared by all calculators."""


class HsurfError(Exception):
    """Base class for input and consistency errors (CLI exit code 1)."""


class PolySyntaxError(HsurfError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class UnknownVariable(HsurfError):
    pass


class ExponentOverflow(HsurfError):
    pass


class VariableMismatch(HsurfError):
    pass


class ChartError(HsurfError):
    pass
