"""Guard exceptions shared across the package."""


class RecdivError(Exception):
    """Base class for guard failures raised by this package."""


class MemoryGuardError(RecdivError):
    """A sieve was refused because its expected footprint exceeds the budget."""


class BudgetError(RecdivError):
    """An enumeration or layout exceeded its configured work budget."""
