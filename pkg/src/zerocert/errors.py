"""Exception hierarchy shared by all modules."""


class ZerocertError(Exception):
    """Base class for every error raised by the package."""


class DomainError(ZerocertError, ValueError):
    """Argument outside the domain of a function (branch cut, strip, half-plane)."""


class AxiomViolation(ZerocertError, ValueError):
    """An L-function descriptor violates one of the axioms (L1)-(L4)."""

    def __init__(self, axiom: str, message: str):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom


class HypothesisViolation(ZerocertError, ValueError):
    """A certificate was requested outside the hypotheses of its theorem."""

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.name = name


class ParseError(ZerocertError, ValueError):
    def __init__(self, path, line: int | None, message: str):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


class BudgetError(ZerocertError, RuntimeError):
    """A requested accuracy or size budget cannot be met."""
