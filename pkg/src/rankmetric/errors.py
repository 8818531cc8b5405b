"""Exception types shared across the library and the CLI exit-code contract."""

from __future__ import annotations


class BudgetExceededError(RuntimeError):
    """An exhaustive computation would enumerate more elements than allowed.

    `computation` names the infeasible step (the CLI reports it and exits 3).
    """

    def __init__(self, computation: str, required: int, budget: int):
        super().__init__(
            f"{computation}: would enumerate {required} elements, budget is {budget}"
        )
        self.computation = computation
        self.required = required
        self.budget = budget


class CodeFileError(ValueError):
    """A code file failed to parse; `line` is the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
