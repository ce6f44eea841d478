"""Exception hierarchy shared by all braidwrench modules."""


class BraidError(Exception):
    """Base class for every error raised by braidwrench."""


class StrandMismatch(BraidError, ValueError):
    def __init__(self, a: int, b: int):
        super().__init__(f"strand counts differ: {a} vs {b}")
        self.strands = (a, b)


class BadParams(BraidError, ValueError):
    pass


class BudgetExceeded(BraidError, RuntimeError):
    """Handle reduction hit its step cap before finishing."""

    def __init__(self, budget: int):
        super().__init__(f"handle reduction exceeded step budget of {budget}")
        self.budget = budget


class OracleBudgetExceeded(BraidError, RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"Artin images exceeded {cap} total letters")
        self.cap = cap


class DomainError(BraidError, ValueError):
    pass


class ParseError(BraidError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
