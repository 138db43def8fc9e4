"""Exception hierarchy for ordlat.

Every error raised by the library derives from OrdlatError so CLI code can
map library failures to exit codes in one place.
"""


class OrdlatError(Exception):
    pass


class AntisymmetryViolation(OrdlatError):
    """The transitive closure of the generating pairs contains a cycle."""

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"antisymmetry violated: cycle through {self.cycle}")


class EmptyPosetError(OrdlatError):
    pass


class CapExceeded(OrdlatError):
    pass


class NotALattice(OrdlatError):
    """Some pair of elements has no greatest lower / least upper bound."""

    def __init__(self, pair, what="bound"):
        self.pair = tuple(pair)
        super().__init__(f"no {what} for elements {self.pair}")


class Unbounded(NotALattice):
    """No global bottom or top element."""

    def __init__(self, missing):
        self.missing = missing
        OrdlatError.__init__(self, f"poset has no global {missing} element")


class NotDistributive(OrdlatError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__(
            f"distributivity fails on triple {self.triple}: "
            "a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c)"
        )


class DegenerateBounds(OrdlatError):
    """Bottom equals top; one-element lattices are rejected by convention."""


class NotHomomorphism(OrdlatError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not a (0,1)-lattice homomorphism: {witness}")


class NotOrderPreserving(OrdlatError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"map is not order-preserving on pair {self.pair}")


class InternalError(OrdlatError):
    """A structural fact that must hold failed to verify; indicates a bug."""


class ParseError(OrdlatError):
    pass
