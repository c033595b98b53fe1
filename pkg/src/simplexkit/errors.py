"""Exception hierarchy shared by all modules."""


class SimplexKitError(Exception):
    """Base class for every error raised by simplexkit."""


class ParseError(SimplexKitError, ValueError):
    pass


class InvalidParams(SimplexKitError, ValueError):
    pass


class DegenerateSimplex(SimplexKitError, ValueError):
    """Vertices are affinely dependent."""


class ResourceLimit(SimplexKitError):
    """An enumeration would exceed the configured candidate budget."""

    def __init__(self, needed, budget):
        super().__init__(f"enumeration needs {needed} candidates, budget is {budget}")
        self.needed = needed
        self.budget = budget


class FacetNotBasic(SimplexKitError):
    pass


class NonCyclicGroup(FacetNotBasic):
    """G(simplex) is not cyclic although all facets were found basic."""


class NotLatticeFree(SimplexKitError):
    pass


class PairingNotFound(SimplexKitError, AssertionError):
    """A pairing that must exist could not be built. Always a bug."""


class NotCoprime(SimplexKitError, ValueError):
    pass


class NotZeroSum(SimplexKitError):
    """The Bernoulli zero-sum hypothesis fails; ``witness`` is a failing t."""

    def __init__(self, witness, value):
        super().__init__(f"sum of B1(t*a_i/n) is {value} at t={witness}")
        self.witness = witness
        self.value = value


class NoPairing(SimplexKitError):
    """The weights admit no negation pairing."""


class NotIsolated(SimplexKitError, ValueError):
    pass


class OddDimension(SimplexKitError, ValueError):
    pass
