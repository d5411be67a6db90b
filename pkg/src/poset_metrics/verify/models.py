"""
Report types of the verification harness
"""
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field

from ..core.errors import InvalidParameterError
from ..core.poset import Poset


class PropositionId(str, Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"
    P4 = "P4"
    P5 = "P5"
    CHEB_SEARCH = "cheb-search"
    SM_EQUIV = "sm-equiv"

    @classmethod
    def parse(cls, text: str) -> "PropositionId":
        """Accepts p1..p5, cheb-search / CHEB_SEARCH and sm-equiv / SM_EQUIV"""
        key = text.strip().lower().replace("_", "-")
        for prop in cls:
            if prop.value.lower() == key:
                return prop
        raise InvalidParameterError(
            f"unknown proposition {text!r}; expected one of {', '.join(p.value for p in cls)}"
        )


class WitnessPoset(BaseModel):
    """Elements in canonical order and the cover edges between them"""
    elements: list[str]
    covers: list[tuple[str, str]]

    @classmethod
    def from_poset(cls, poset: Poset) -> "WitnessPoset":
        return cls(elements=list(poset.names), covers=poset.cover_pairs)

    def to_poset(self) -> Poset:
        return Poset.from_covers(self.elements, self.covers)


class Witness(BaseModel):
    """A poset together with the check it violates and the violation values"""
    check: str
    poset: WitnessPoset
    canonical_code: str = ""
    detail: dict[str, Any] = Field(default_factory=dict)

    def to_poset(self) -> Poset:
        return self.poset.to_poset()


class SizeTally(BaseModel):
    n: int
    scanned: int
    relevant: int


class VerifyReport(BaseModel):
    """
    Outcome of one harness run

    holds is true iff no witness was found, except for cheb-search where it
    means that at least one witness was found.
    """
    proposition: PropositionId
    n_max: int
    scanned: int
    relevant: int
    holds: bool
    violations: int
    witnesses: list[Witness]
    per_size: list[SizeTally]
    observations: dict[str, int]
    notes: list[str]
