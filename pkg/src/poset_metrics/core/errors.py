"""
Exception hierarchy for poset construction, queries and the harness
"""
from typing import Optional


class PosetError(Exception):
    """Base class for every error raised by poset_metrics"""


class EmptyPosetError(PosetError):
    """A poset needs at least one element"""


class EmptyNameError(PosetError):
    """An element name is the empty string"""


class InvalidNameError(PosetError):
    """An element name contains whitespace or '#'"""


class DuplicateElementError(PosetError):
    """An element was declared more than once"""


class CycleDetectedError(PosetError):
    """The input pairs imply x < x for some element"""

    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("order pairs contain a cycle: " + " < ".join(cycle + cycle[:1]))


class UnknownElementError(PosetError):
    """A name does not belong to the poset"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown element {name!r}")


class NotComparableError(PosetError):
    """The operation needs a comparable pair"""

    def __init__(self, x: str, y: str):
        self.x, self.y = x, y
        super().__init__(f"elements {x!r} and {y!r} are not comparable")


class NoUpperBoundError(PosetError):
    """Two elements have no common upper bound"""

    def __init__(self, x: str, y: str):
        self.x, self.y = x, y
        super().__init__(f"elements {x!r} and {y!r} have no common upper bound")


class NoLeastUpperBoundError(PosetError):
    """Common upper bounds exist but none is least"""

    def __init__(self, x: str, y: str, minimal: list[str]):
        self.x, self.y = x, y
        self.minimal = minimal
        super().__init__(
            f"elements {x!r} and {y!r} have {len(minimal)} minimal upper bounds "
            f"({', '.join(minimal)}) and no join"
        )


class NoLowerBoundError(PosetError):
    """Two elements have no common lower bound"""

    def __init__(self, x: str, y: str):
        self.x, self.y = x, y
        super().__init__(f"elements {x!r} and {y!r} have no common lower bound")


class NotAJoinSemilatticeError(PosetError):
    """Semimodularity is only defined on join semilattices"""


class NotATreeOrderError(PosetError):
    """Kinship degrees need a tree order with ancestors upward"""


class DisconnectedError(PosetError):
    """No zigzag path joins the two elements"""

    def __init__(self, x: str, y: str):
        self.x, self.y = x, y
        super().__init__(f"elements {x!r} and {y!r} lie in different components")


class DistanceUndefinedError(PosetError):
    """A distance scan hit a pair on which the distance is not defined"""

    def __init__(self, kind: str, x: str, y: str):
        self.kind, self.x, self.y = kind, x, y
        super().__init__(f"{kind} distance is undefined for ({x}, {y})")


class InvalidParameterError(PosetError):
    """A family spec or harness parameter is out of range"""


class SizeCapExceededError(PosetError):
    """Exhaustive enumeration is capped at a fixed number of elements"""

    def __init__(self, n: int, cap: int):
        self.n, self.cap = n, cap
        super().__init__(f"enumeration size {n} exceeds the cap of {cap} elements")


class ParseError(PosetError):
    """A poset file line could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
