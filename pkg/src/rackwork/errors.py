"""Exception hierarchy shared by all rackwork modules."""


class RackworkError(Exception):
    """Base class for all errors raised by this package."""


class IndexOutOfRange(RackworkError):
    """An element index falls outside the carrier 0..n-1."""


class SizeMismatch(RackworkError):
    """A table or vector has the wrong number of cells."""


class NotLeftInvertible(RackworkError):
    """A dot table has a row that is not a permutation of the carrier."""


class NotAssociative(RackworkError):
    """Multiplication table fails associativity; carries a witness triple."""

    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"not associative at (a,b,c)=({a},{b},{c})")
        self.witness = (a, b, c)


class NoIdentity(RackworkError):
    """Multiplication table has no two-sided identity."""


class NoInverse(RackworkError):
    """An element has no inverse; carries the element index."""

    def __init__(self, a: int):
        super().__init__(f"element {a} has no inverse")
        self.element = a


class KindMismatch(RackworkError):
    """A structure does not satisfy the axioms its kind tag claims,
    or two structures of different kinds were combined."""


class CarrierTooLarge(RackworkError):
    """Requested carrier exceeds the configured cap (see RACKWORK_MAX_N)."""


class CarrierMismatch(RackworkError):
    """Two pair maps on different carriers were combined."""


class DeterminantNotOne(RackworkError):
    """Matrix determinant is not exactly 1; carries the actual value."""

    def __init__(self, value):
        super().__init__(f"determinant is {value}, expected 1")
        self.value = value


class LevelTooLarge(RackworkError):
    """Requested power-sum level exceeds the configured cap."""


class InvalidFile(RackworkError):
    """A structure/group/pair-map file is malformed or violates its schema."""
