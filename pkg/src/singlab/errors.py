"""Exception types shared across singlab."""


class SinglabError(Exception):
    """Base class for all singlab errors."""


class ParseError(SinglabError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class ResourceLimitError(SinglabError, RuntimeError):
    """A Groebner computation exceeded its configured caps."""


class HypothesisError(SinglabError, ValueError):
    """The input does not satisfy the hypotheses a result relies on."""


class InexactDivisionError(SinglabError, ArithmeticError):
    """A polynomial quotient that was required to be exact is not."""
