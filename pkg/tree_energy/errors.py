"""Exception hierarchy shared by every tree_energy module.

Library code raises these; only the CLI turns them into exit codes.
"""


class TreeEnergyError(Exception):
    """Base class for all domain errors"""


class InvalidSpec(TreeEnergyError):
    """A tree spec, edge or claim id given as input is malformed or out of range"""


class NotAForest(TreeEnergyError):
    """Edge list contains a cycle, a loop or a duplicate edge"""


class EdgeNotPresent(TreeEnergyError):
    pass


class VertexNotPresent(TreeEnergyError):
    pass


class SameVertex(TreeEnergyError):
    pass


class NotConnected(TreeEnergyError):
    pass


class ZeroPolynomial(TreeEnergyError):
    pass


class DegreeMismatch(TreeEnergyError):
    pass


class NotMonic(TreeEnergyError):
    pass


class NegativeCoefficient(TreeEnergyError):
    pass


class OrderMismatch(TreeEnergyError):
    pass


class QuadratureFailure(TreeEnergyError):
    """The integral could not be brought under the requested error budget"""


class CapExceeded(TreeEnergyError):
    pass


class UnresolvedTie(TreeEnergyError):
    """Two trees with different phi-tilde whose energies cannot be separated"""

    def __init__(self, first: str, second: str, radius: float) -> None:
        super().__init__(
            f"energies of {first} and {second} overlap at radius {radius:.3g}"
        )
        self.first = first
        self.second = second
        self.radius = radius


class InvalidOrder(TreeEnergyError):
    pass


class RangeViolation(TreeEnergyError):
    pass


class VerificationFailure(TreeEnergyError):
    """A mechanically re-checked quantity diverged from its reference value"""

    def __init__(self, quantity: str, expected: str | None, observed: str) -> None:
        super().__init__(f"{quantity}: expected {expected}, observed {observed}")
        self.quantity = quantity
        self.expected = expected
        self.observed = observed
