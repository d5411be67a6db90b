"""
Immutable finite posets
Stores the reflexive-transitive closure as a dense boolean matrix and derives
the cover relation, heights and joins from it on demand
"""
import logging
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx
import numpy as np

from .errors import (
    CycleDetectedError,
    DuplicateElementError,
    EmptyNameError,
    EmptyPosetError,
    InvalidNameError,
    InvalidParameterError,
    NoLeastUpperBoundError,
    NotComparableError,
    NoUpperBoundError,
    UnknownElementError,
)

logger = logging.getLogger(__name__)

# Sentinels stored in the integer matrices below
UNREACHABLE = -1
NO_UPPER_BOUND = -1
NO_LEAST_UPPER_BOUND = -2


class Element(NamedTuple):
    """An element name together with its dense index"""
    name: str
    index: int


def validate_name(name: object) -> str:
    """Element names are nonempty tokens without whitespace or '#'"""
    if not isinstance(name, str) or name == "":
        raise EmptyNameError("element names must be nonempty strings")
    if "#" in name or any(ch.isspace() for ch in name):
        raise InvalidNameError(f"element name {name!r} contains whitespace or '#'")
    return name


def _bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product: out[i, j] = any_k a[i, k] and b[k, j]"""
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def _strict_closure(relation: np.ndarray) -> np.ndarray:
    """Warshall transitive closure of a strict relation"""
    closure = relation.copy()
    for k in range(closure.shape[0]):
        closure |= np.outer(closure[:, k], closure[k, :])
    return closure


def is_partial_order(leq: np.ndarray) -> bool:
    """Matrix scan for reflexivity, antisymmetry and transitivity"""
    n = leq.shape[0]
    if leq.shape != (n, n) or not leq.diagonal().all():
        return False
    off_diagonal = ~np.eye(n, dtype=bool)
    if (leq & leq.T & off_diagonal).any():
        return False
    return bool((_bool_product(leq, leq) == leq).all())


class Poset:
    """A finite partial order on named elements

    Instances are immutable: the closure and cover matrices are read-only and
    every derived table is computed once and cached on the instance.
    """

    def __init__(self, names: Sequence[str], leq: np.ndarray):
        names = tuple(names)
        if not names:
            raise EmptyPosetError("a poset needs at least one element")

        index: dict[str, int] = {}
        for i, name in enumerate(names):
            validate_name(name)
            if name in index:
                raise DuplicateElementError(f"element {name!r} declared twice")
            index[name] = i

        leq = np.array(leq, dtype=bool)
        n = len(names)
        if leq.shape != (n, n):
            raise InvalidParameterError(
                f"order matrix has shape {leq.shape}, expected {(n, n)}"
            )
        if not is_partial_order(leq):
            raise InvalidParameterError("matrix is not a reflexive, antisymmetric, transitive order")

        strict = leq & ~np.eye(n, dtype=bool)
        cover = strict & ~_bool_product(strict, strict)
        leq.setflags(write=False)
        cover.setflags(write=False)

        self._names = names
        self._index = index
        self._leq = leq
        self._cover = cover

    @classmethod
    def from_relations(
        cls,
        names: Sequence[str],
        pairs: Iterable[tuple[str, str]]
    ) -> "Poset":
        """
        Build a poset on `names` (in that order) from strict-order pairs

        Args:
            names: All element names, in the order indices are assigned
            pairs: (lower, upper) pairs; any strict relations, not only covers

        Returns:
            The poset whose order is the reflexive-transitive closure of pairs
        """
        names = list(names)
        index = {name: i for i, name in enumerate(names)}
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(len(names)))
        for lower, upper in pairs:
            for name in (lower, upper):
                if name not in index:
                    raise UnknownElementError(name)
            digraph.add_edge(index[lower], index[upper])

        if not nx.is_directed_acyclic_graph(digraph):
            cycle = nx.find_cycle(digraph)
            raise CycleDetectedError([names[u] for u, _ in cycle])

        relation = np.zeros((len(names), len(names)), dtype=bool)
        for u, v in digraph.edges:
            relation[u, v] = True
        closure = _strict_closure(relation) | np.eye(len(names), dtype=bool)
        return cls(names, closure)

    @classmethod
    def from_covers(cls, names: Sequence[str], covers: Iterable[tuple[str, str]]) -> "Poset":
        """Build a poset from its cover list, keeping the given element order"""
        return cls.from_relations(names, covers)

    @classmethod
    def from_matrix(cls, names: Sequence[str], leq: np.ndarray) -> "Poset":
        """Wrap an order matrix that is already reflexive and transitive"""
        return cls(names, leq)

    # Elements

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def __len__(self) -> int:
        return len(self._names)

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        """Dense index of an element name"""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError(name) from None

    def element(self, name: str) -> Element:
        return Element(name, self.index(name))

    # Relations

    @property
    def leq_matrix(self) -> np.ndarray:
        """Read-only closure matrix: leq_matrix[i, j] iff element i <= element j"""
        return self._leq

    @property
    def cover_matrix(self) -> np.ndarray:
        """Read-only cover matrix: cover_matrix[i, j] iff element i is covered by j"""
        return self._cover

    @property
    def cover_pairs(self) -> list[tuple[str, str]]:
        """Cover relation as (lower, upper) name pairs in index order"""
        return [(self._names[i], self._names[j]) for i, j in np.argwhere(self._cover)]

    @property
    def cover_edge_count(self) -> int:
        return int(self._cover.sum())

    def leq(self, x: str, y: str) -> bool:
        """True iff x <= y"""
        return bool(self._leq[self.index(x), self.index(y)])

    def comparable(self, x: str, y: str) -> bool:
        i, j = self.index(x), self.index(y)
        return bool(self._leq[i, j] or self._leq[j, i])

    def interval(self, x: str, y: str) -> list[str]:
        """
        Elements z with x <= z <= y, in element order

        The pair may be given in either orientation; incomparable pairs raise.
        """
        i, j = self._ordered_pair(x, y)
        members = self._leq[i] & self._leq[:, j]
        return [self._names[k] for k in np.flatnonzero(members)]

    def _ordered_pair(self, x: str, y: str) -> tuple[int, int]:
        i, j = self.index(x), self.index(y)
        if self._leq[i, j]:
            return i, j
        if self._leq[j, i]:
            return j, i
        raise NotComparableError(x, y)

    # Graphs

    @cached_property
    def cover_digraph(self) -> nx.DiGraph:
        """Directed graph on indices with an arc i -> j when i is covered by j"""
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(len(self)))
        digraph.add_edges_from(map(tuple, np.argwhere(self._cover).tolist()))
        return digraph

    @cached_property
    def hasse_diagram(self) -> nx.Graph:
        """Undirected Hasse diagram on indices"""
        return self.cover_digraph.to_undirected(as_view=False)

    # Heights

    @cached_property
    def height_matrix(self) -> np.ndarray:
        """heights[i, j] = h(i, j) for i <= j (shortest cover path), else UNREACHABLE"""
        heights = np.full((len(self), len(self)), UNREACHABLE, dtype=np.int64)
        for source, lengths in nx.all_pairs_shortest_path_length(self.cover_digraph):
            for target, length in lengths.items():
                heights[source, target] = length
        heights.setflags(write=False)
        return heights

    @cached_property
    def max_height_matrix(self) -> np.ndarray:
        """Longest cover path between i <= j, i.e. the largest maximal chain of [i, j] minus 1"""
        digraph = self.cover_digraph
        order = list(nx.topological_sort(digraph))
        longest = np.full((len(self), len(self)), UNREACHABLE, dtype=np.int64)
        for source in range(len(self)):
            longest[source, source] = 0
            for node in order:
                reached = longest[source, node]
                if reached == UNREACHABLE:
                    continue
                for succ in digraph.successors(node):
                    if longest[source, succ] < reached + 1:
                        longest[source, succ] = reached + 1
        longest.setflags(write=False)
        return longest

    def height(self, x: str, y: str) -> int:
        """h(x, y): least cardinality of a maximal chain of the interval, minus 1"""
        i, j = self._ordered_pair(x, y)
        return int(self.height_matrix[i, j])

    def max_height(self, x: str, y: str) -> int:
        """Greatest cardinality of a maximal chain of the interval, minus 1"""
        i, j = self._ordered_pair(x, y)
        return int(self.max_height_matrix[i, j])

    # Joins

    @cached_property
    def join_matrix(self) -> np.ndarray:
        """joins[i, j] = index of i v j, or NO_UPPER_BOUND / NO_LEAST_UPPER_BOUND"""
        n = len(self)
        joins = np.full((n, n), NO_UPPER_BOUND, dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                common = np.flatnonzero(self._leq[i] & self._leq[j])
                if common.size == 0:
                    continue
                below_all = self._leq[np.ix_(common, common)].all(axis=1)
                least = common[below_all]
                joins[i, j] = joins[j, i] = least[0] if least.size else NO_LEAST_UPPER_BOUND
        joins.setflags(write=False)
        return joins

    def minimal_upper_bounds(self, x: str, y: str) -> list[str]:
        """Minimal elements of the common-upper-bound set of x and y"""
        common = np.flatnonzero(self._leq[self.index(x)] & self._leq[self.index(y)])
        sub = self._leq[np.ix_(common, common)]
        # a bound is minimal when it is above no other common bound but itself
        minimal = common[sub.sum(axis=0) == 1]
        return [self._names[k] for k in minimal]

    def join(self, x: str, y: str) -> str:
        """The least common upper bound x v y"""
        j = int(self.join_matrix[self.index(x), self.index(y)])
        if j == NO_UPPER_BOUND:
            raise NoUpperBoundError(x, y)
        if j == NO_LEAST_UPPER_BOUND:
            raise NoLeastUpperBoundError(x, y, self.minimal_upper_bounds(x, y))
        return self._names[j]

    # Duality and identity

    def dual(self) -> "Poset":
        """Same elements with the order reversed"""
        return Poset(self._names, self._leq.T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._names == other._names and bool(np.array_equal(self._leq, other._leq))

    def __hash__(self) -> int:
        return hash((self._names, self._leq.tobytes()))

    def __repr__(self) -> str:
        covers = ", ".join(f"{a}<{b}" for a, b in self.cover_pairs)
        return f"Poset(n={len(self)}, covers=[{covers}])"


def build_poset(
    relations: Iterable[tuple[str, str]],
    isolated: Iterable[str] = ()
) -> Poset:
    """
    Build a poset from raw strict-order pairs and isolated element names

    Elements are indexed in first-mention order: relation endpoints first,
    then the isolated declarations.

    Args:
        relations: (lower, upper) pairs, not necessarily covers
        isolated: Names of elements that appear in no relation

    Returns:
        The validated poset

    Raises:
        CycleDetectedError: the pairs imply x < x
        DuplicateElementError: an isolated name is repeated or also related
        EmptyNameError / InvalidNameError: a malformed name
    """
    relations = list(relations)
    names: list[str] = []
    seen: set[str] = set()
    for pair in relations:
        for name in pair:
            validate_name(name)
            if name not in seen:
                seen.add(name)
                names.append(name)
    for name in isolated:
        validate_name(name)
        if name in seen:
            raise DuplicateElementError(f"element {name!r} declared twice")
        seen.add(name)
        names.append(name)

    poset = Poset.from_relations(names, relations)
    logger.debug(f"Built poset with {len(poset)} elements and {poset.cover_edge_count} covers")
    return poset
