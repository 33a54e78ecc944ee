"""Exception types shared across the package."""


class Nil22Error(Exception):
    """Base class for all package-specific errors."""


class SingularMatrix(Nil22Error):
    """Row reduction hit a matrix whose rows do not span a finite-index lattice."""


class NotPPower(Nil22Error):
    """A p-power Hermite form was requested but the determinant is not a power of p."""


class InvalidAutomorphism(Nil22Error):
    """Matrix does not have the automorphism shape required for the right action."""


class NotAnIdeal(Nil22Error):
    """Canonicalization was asked for a sublattice that is not an ideal."""


class ReductionDiverged(Nil22Error):
    """The normal-form reduction loop exceeded its iteration bound (indicates a defect)."""


class InvalidTuple(Nil22Error):
    """Invariant tuple violates its defining constraints."""


class IncomparableLattices(Nil22Error):
    """Orbit comparison between lattices of different index or different prime."""


class BudgetExceeded(Nil22Error):
    """Requested orbit computation is outside the configured budget."""

    def __init__(self, p: int, n: int, max_n: int, predicted_ideals: int):
        self.p = p
        self.n = n
        self.max_n = max_n
        self.predicted_ideals = predicted_ideals
        super().__init__(
            f"orbit computation for p={p}, n={n} exceeds budget (max n={max_n} "
            f"for this prime; would enumerate {predicted_ideals} ideals); "
            f"raise the budget explicitly to proceed"
        )
