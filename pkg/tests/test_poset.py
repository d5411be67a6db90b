"""
Unit tests for poset construction, closure, heights and joins
"""
import itertools

import numpy as np
import pytest

from poset_metrics.core.errors import (
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
from poset_metrics.core.poset import Poset, build_poset
from poset_metrics.core.predicates import is_jordan_dedekind
from poset_metrics.enumeration import enumerate_posets
from poset_metrics.families import FAMILIES, FamilySpec, boolean, chain, generate, pentagon


def _brute_cover(leq: np.ndarray) -> np.ndarray:
    n = leq.shape[0]
    cover = np.zeros_like(leq)
    for x, y in itertools.permutations(range(n), 2):
        if leq[x, y] and not any(leq[x, z] and leq[z, y] for z in range(n) if z not in (x, y)):
            cover[x, y] = True
    return cover


class TestBuildPoset:
    """Test cases for build_poset"""

    def test_chain_closure_and_reduction(self):
        """Test a<b<c is closed and reduced"""
        poset = build_poset([("a", "b"), ("b", "c")])
        assert poset.names == ("a", "b", "c")
        assert poset.leq("a", "c")
        assert poset.cover_pairs == [("a", "b"), ("b", "c")]

    def test_non_cover_pairs_are_accepted(self):
        """Test redundant pairs collapse to the covers"""
        poset = build_poset([("a", "c"), ("a", "b"), ("b", "c")])
        assert sorted(poset.cover_pairs) == [("a", "b"), ("b", "c")]

    def test_pentagon(self):
        """Test the pentagon has 5 elements and 5 covers"""
        poset = build_poset([("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")])
        assert len(poset) == 5
        assert poset.cover_edge_count == 5

    def test_first_mention_order(self):
        """Test elements are indexed in first-mention order, isolated last"""
        poset = build_poset([("x", "y"), ("w", "y")], isolated=["solo"])
        assert poset.names == ("x", "y", "w", "solo")
        assert poset.index("solo") == 3

    def test_cycle_detected(self):
        """Test a two-cycle is rejected"""
        with pytest.raises(CycleDetectedError) as info:
            build_poset([("a", "b"), ("b", "a")])
        assert set(info.value.cycle) == {"a", "b"}

    def test_self_loop_detected(self):
        with pytest.raises(CycleDetectedError):
            build_poset([("a", "a")])

    def test_duplicate_isolated(self):
        """Test an isolated element cannot be repeated or also related"""
        with pytest.raises(DuplicateElementError):
            build_poset([], isolated=["a", "a"])
        with pytest.raises(DuplicateElementError):
            build_poset([("a", "b")], isolated=["a"])

    def test_bad_names(self):
        """Test empty names and names with whitespace or '#'"""
        with pytest.raises(EmptyNameError):
            build_poset([("", "b")])
        with pytest.raises(InvalidNameError):
            build_poset([("a b", "c")])
        with pytest.raises(InvalidNameError):
            build_poset([], isolated=["x#1"])

    def test_empty_poset(self):
        with pytest.raises(EmptyPosetError):
            build_poset([])


class TestPosetQueries:
    """Test cases for order queries on a built poset"""

    def setup_method(self):
        self.pentagon = pentagon()
        self.cube = boolean(3)

    def test_leq(self):
        """Test reflexivity and the pentagon relations"""
        assert self.pentagon.leq("0", "1")
        assert not self.pentagon.leq("a", "b")
        for name in self.pentagon:
            assert self.pentagon.leq(name, name)

    def test_unknown_element(self):
        with pytest.raises(UnknownElementError):
            self.pentagon.leq("0", "nope")

    def test_interval(self):
        """Test intervals in both orientations"""
        assert set(self.pentagon.interval("0", "1")) == {"0", "a", "b", "c", "1"}
        assert self.pentagon.interval("1", "0") == self.pentagon.interval("0", "1")
        assert self.pentagon.interval("b", "b") == ["b"]
        assert chain(3).interval("c0", "c2") == ["c0", "c1", "c2"]

    def test_interval_incomparable(self):
        with pytest.raises(NotComparableError):
            self.pentagon.interval("a", "b")

    def test_height(self):
        """Test shortest and longest maximal chains"""
        assert self.pentagon.height("0", "1") == 2
        assert self.pentagon.height("1", "0") == 2
        assert self.pentagon.max_height("0", "1") == 3
        assert self.pentagon.height("c", "c") == 0
        assert self.cube.height("{}", "{1,2,3}") == 3

    def test_height_incomparable(self):
        with pytest.raises(NotComparableError):
            self.pentagon.height("a", "c")

    def test_join(self):
        """Test joins in the cube and in a tree"""
        assert self.cube.join("{1}", "{2}") == "{1,2}"
        tree = build_poset([("kid1", "parent"), ("kid2", "parent")])
        assert tree.join("kid1", "kid2") == "parent"

    def test_join_missing(self):
        """Test both join failure modes"""
        bowtie = build_poset([("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
        with pytest.raises(NoLeastUpperBoundError) as info:
            bowtie.join("a", "b")
        assert sorted(info.value.minimal) == ["c", "d"]
        with pytest.raises(NoUpperBoundError):
            build_poset([], isolated=["p", "q"]).join("p", "q")

    def test_dual(self):
        """Test duality reverses the order and is an involution"""
        dual = chain(3).dual()
        assert dual.leq("c2", "c0")
        assert dual.cover_pairs == [("c1", "c0"), ("c2", "c1")]
        assert self.pentagon.dual().dual() == self.pentagon

    def test_matrices_are_read_only(self):
        with pytest.raises(ValueError):
            self.pentagon.leq_matrix[0, 1] = True

    def test_from_matrix_rejects_non_orders(self):
        with pytest.raises(InvalidParameterError):
            Poset.from_matrix(["a", "b"], np.ones((2, 2), dtype=bool))


FAMILY_SPECS = [
    "chain:5",
    "antichain:4",
    "boolean:3",
    "grid:3x4",
    "grid:2x2x2",
    "pentagon",
    "prop4-witness",
    "chebyshev-witness",
    "random:8:0.3:42",
    "random:7:0.6:1",
]


def _invariant_posets() -> list[Poset]:
    posets = [build_poset([("a", "c"), ("b", "c")], ["z"])]
    posets += [generate(FamilySpec.parse(text)) for text in FAMILY_SPECS]
    for n in range(1, 6):
        posets += enumerate_posets(n)
    return posets


class TestPosetInvariants:
    """Test closure, cover and height invariants on families and enumerated posets"""

    def setup_method(self):
        self.posets = _invariant_posets()

    def test_every_family_is_covered(self):
        assert {FamilySpec.parse(text).family for text in FAMILY_SPECS} == set(FAMILIES)

    def test_cover_matches_brute_force(self):
        for poset in self.posets:
            assert np.array_equal(poset.cover_matrix, _brute_cover(poset.leq_matrix))

    def test_closure_is_transitive(self):
        for poset in self.posets:
            leq = poset.leq_matrix
            n = len(poset)
            for x, y, z in itertools.product(range(n), repeat=3):
                if leq[x, y] and leq[y, z]:
                    assert leq[x, z]

    def test_height_concatenation(self):
        """Test h(x, u) <= h(x, j) + h(j, u) along every x <= j <= u"""
        for poset in self.posets:
            heights = poset.height_matrix
            leq = poset.leq_matrix
            n = len(poset)
            for x, j, u in itertools.product(range(n), repeat=3):
                if leq[x, j] and leq[j, u]:
                    assert heights[x, u] <= heights[x, j] + heights[j, u]

    def test_jordan_dedekind_heights_add(self):
        """Test h(x, u) = h(x, j) + h(j, u) exactly when every interval is graded"""
        graded = [poset for poset in self.posets if is_jordan_dedekind(poset)]
        assert 0 < len(graded) < len(self.posets)
        for poset in graded:
            heights = poset.height_matrix
            leq = poset.leq_matrix
            n = len(poset)
            for x, j, u in itertools.product(range(n), repeat=3):
                if leq[x, j] and leq[j, u]:
                    assert heights[x, u] == heights[x, j] + heights[j, u]

    def test_pentagon_heights_do_not_add(self):
        poset = pentagon()
        heights = poset.height_matrix
        bottom, c, top = poset.index("0"), poset.index("c"), poset.index("1")
        assert heights[bottom, top] == 2
        assert heights[bottom, c] + heights[c, top] == 3
