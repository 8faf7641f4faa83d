"""Exception hierarchy.

Input problems derive from :class:`InputError`, capacity limits from
:class:`CapacityError`. The CLI maps them to exit codes 1 and 2.
"""

from __future__ import annotations


class DegenlabError(Exception):
    """Base class for all package errors."""


class InputError(DegenlabError, ValueError):
    """Malformed or inconsistent user input."""


class CapacityError(DegenlabError):
    """A request exceeds a configured search or canonicalization bound."""


class InvalidPlaneCount(InputError):
    pass


class LoopEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class TooManyVertices(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message: str, position: int = 0, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class AmbiguousSymbol(InputError):
    def __init__(self, symbol: str, certificates: list[str]):
        self.symbol = symbol
        self.certificates = certificates
        super().__init__(
            f"type symbol {symbol!r} matches {len(certificates)} non-isomorphic graphs; "
            "supply edges instead"
        )


class NegativeCount(InputError):
    """A tau or nu count came out negative: the configuration is not realizable."""

    def __init__(self, name: str, value: int):
        self.name = name
        self.value = value
        super().__init__(f"{name} = {value} < 0")


class NegativeGenus(InputError):
    def __init__(self, name: str, value: int):
        self.name = name
        self.value = value
        super().__init__(f"{name} = {value} < 0")


class EmptyCurve(InputError):
    pass


class InternalInconsistency(DegenlabError, AssertionError):
    """Two independent formulas disagree. Always a bug, never bad input."""


class TooLarge(CapacityError):
    pass


class SearchSpaceTooLarge(CapacityError):
    pass
