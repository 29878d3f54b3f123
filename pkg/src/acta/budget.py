"""Cooperative budget / cancellation token for enumeration-heavy operations."""

from .errors import BudgetExceeded, Cancelled


class Budget:
    """Counts work steps; long-running loops call spend() and abort once exhausted.

    A Budget with steps=None never runs out but still honours cancel(),
    which may be called from another thread.
    """

    def __init__(self, steps: int | None = None):
        self.remaining = steps
        self.cancelled = False

    def cancel(self) -> None:
        self.cancelled = True

    def spend(self, n: int = 1) -> None:
        if self.cancelled:
            raise Cancelled("operation cancelled")
        if self.remaining is not None:
            self.remaining -= n
            if self.remaining < 0:
                raise BudgetExceeded("work budget exhausted")
