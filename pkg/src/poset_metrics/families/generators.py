"""
Named poset families and the fixed witness posets
Every generator is deterministic; random orders are reproducible from their seed
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..core.errors import InvalidParameterError
from ..core.poset import Poset

logger = logging.getLogger(__name__)

MAX_BOOLEAN_RANK = 10
MAX_GENERATED_SIZE = 1024
MAX_SEED = 2**64

FAMILIES = (
    "chain",
    "antichain",
    "boolean",
    "grid",
    "pentagon",
    "prop4_witness",
    "chebyshev_witness",
    "random",
)
_FIXED = ("pentagon", "prop4_witness", "chebyshev_witness")


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its parameters, e.g. grid (3, 4) or random (8, 0.3) seed 42"""
    family: str
    params: tuple[int | float, ...] = ()
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """
        Parse the CLI spelling of a family

        Accepted forms: chain:5, antichain:3, boolean:3, grid:3x4, pentagon,
        prop4-witness, chebyshev-witness, random:N:P[:SEED]
        """
        parts = text.strip().split(":")
        family = parts[0].lower().replace("-", "_")
        args = parts[1:]
        try:
            if family in ("chain", "antichain", "boolean") and len(args) == 1:
                spec = cls(family, (int(args[0]),))
            elif family == "grid" and len(args) == 1:
                spec = cls(family, tuple(int(d) for d in args[0].lower().split("x")))
            elif family in _FIXED and not args:
                spec = cls(family)
            elif family == "random" and len(args) in (2, 3):
                seed = int(args[2]) if len(args) == 3 else 0
                spec = cls(family, (int(args[0]), float(args[1])), seed)
            else:
                raise InvalidParameterError(f"cannot parse family spec {text!r}")
        except ValueError:
            raise InvalidParameterError(f"bad number in family spec {text!r}") from None
        spec.validate()
        return spec

    def __str__(self) -> str:
        name = self.family.replace("_", "-")
        if self.family in _FIXED:
            return name
        if self.family == "grid":
            return f"grid:{'x'.join(str(int(d)) for d in self.params)}"
        if self.family == "random":
            n, p = self.params
            return f"random:{int(n)}:{p}:{self.seed}"
        return f"{name}:{int(self.params[0])}"

    def validate(self) -> None:
        """Check the parameters against the documented bounds"""
        family, params = self.family, self.params
        if family not in FAMILIES:
            raise InvalidParameterError(f"unknown family {family!r}")
        if family in _FIXED:
            if params:
                raise InvalidParameterError(f"{family} takes no parameters")
        elif family in ("chain", "antichain"):
            if len(params) != 1 or not 1 <= params[0] <= MAX_GENERATED_SIZE:
                raise InvalidParameterError(
                    f"{family} needs 1 <= n <= {MAX_GENERATED_SIZE}"
                )
        elif family == "boolean":
            if len(params) != 1 or not 0 <= params[0] <= MAX_BOOLEAN_RANK:
                raise InvalidParameterError(f"boolean needs 0 <= k <= {MAX_BOOLEAN_RANK}")
        elif family == "grid":
            if not params or any(d < 2 for d in params):
                raise InvalidParameterError("grid needs at least one dimension, each >= 2")
            if int(np.prod(params)) > MAX_GENERATED_SIZE:
                raise InvalidParameterError(f"grid has more than {MAX_GENERATED_SIZE} elements")
        elif family == "random":
            if len(params) != 2:
                raise InvalidParameterError("random needs n and p")
            n, p = params
            if not 1 <= n <= MAX_GENERATED_SIZE or not 0.0 <= p <= 1.0:
                raise InvalidParameterError(
                    f"random needs 1 <= n <= {MAX_GENERATED_SIZE} and 0 <= p <= 1"
                )
            if not 0 <= self.seed < MAX_SEED:
                raise InvalidParameterError("random seed must be a 64-bit natural")


def chain(n: int) -> Poset:
    names = [f"c{i}" for i in range(n)]
    return Poset.from_covers(names, zip(names, names[1:]))


def antichain(n: int) -> Poset:
    return Poset.from_matrix([f"a{i}" for i in range(n)], np.eye(n, dtype=bool))


def _subset_name(members: tuple[int, ...]) -> str:
    return "{" + ",".join(str(m + 1) for m in members) + "}"


def boolean(k: int) -> Poset:
    """Subset lattice of {1..k}, elements ordered by size then lexicographically"""
    subsets = [
        members
        for size in range(k + 1)
        for members in itertools.combinations(range(k), size)
    ]
    masks = np.array([sum(1 << m for m in members) for members in subsets], dtype=np.int64)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    return Poset.from_matrix([_subset_name(members) for members in subsets], leq)


def grid(*dims: int) -> Poset:
    """Product of chains with dims[i] elements, ordered coordinatewise"""
    coords = np.array(list(itertools.product(*(range(d) for d in dims))), dtype=np.int64)
    leq = (coords[:, None, :] <= coords[None, :, :]).all(axis=2)
    names = ["(" + ",".join(str(c) for c in point) + ")" for point in coords.tolist()]
    return Poset.from_matrix(names, leq)


def pentagon() -> Poset:
    """0 < a < 1 and 0 < b < c < 1: a lattice without the Jordan-Dedekind condition"""
    return Poset.from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
    )


def prop4_witness() -> Poset:
    """
    Non-semimodular join semilattice where up-down breaks the triangle inequality

    y is covered by x and z but x v z = w does not cover x:
    d(x, z) = 3 while d(x, y) + d(y, z) = 2.
    """
    return Poset.from_covers(
        ["y", "x", "z", "t", "w"],
        [("y", "x"), ("y", "z"), ("x", "t"), ("t", "w"), ("z", "w")],
    )


def chebyshev_witness() -> Poset:
    """Join semilattice with a Chebyshev triangle failure d(x, z) = 3 > 1 + 1"""
    return Poset.from_covers(
        ["y", "x", "z", "t1", "t2", "w"],
        [("y", "x"), ("y", "z"), ("x", "t1"), ("t1", "t2"), ("t2", "w"), ("z", "w")],
    )


def random_poset(n: int, p: float, seed: int) -> Poset:
    """
    Close a random strict upper-triangular relation

    Each pair i < j (in the fixed element order) is related independently with
    probability p. The resulting distribution is not uniform over posets.
    """
    rng = np.random.default_rng(seed)
    relation = np.triu(rng.random((n, n)) < p, k=1)
    names = [f"r{i}" for i in range(n)]
    pairs = [(names[i], names[j]) for i, j in np.argwhere(relation)]
    return Poset.from_relations(names, pairs)


_GENERATORS: dict[str, Callable[[FamilySpec], Poset]] = {
    "chain": lambda spec: chain(int(spec.params[0])),
    "antichain": lambda spec: antichain(int(spec.params[0])),
    "boolean": lambda spec: boolean(int(spec.params[0])),
    "grid": lambda spec: grid(*(int(d) for d in spec.params)),
    "pentagon": lambda spec: pentagon(),
    "prop4_witness": lambda spec: prop4_witness(),
    "chebyshev_witness": lambda spec: chebyshev_witness(),
    "random": lambda spec: random_poset(int(spec.params[0]), float(spec.params[1]), spec.seed),
}


def generate(spec: FamilySpec | str) -> Poset:
    """
    Generate a family member

    Args:
        spec: A FamilySpec or its CLI spelling (e.g. "grid:3x4")

    Returns:
        The generated poset
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    spec.validate()
    poset = _GENERATORS[spec.family](spec)
    logger.info(f"Generated {spec} with {len(poset)} elements")
    return poset
