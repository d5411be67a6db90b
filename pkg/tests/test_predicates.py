"""
Unit tests for structural predicates and the structural report
"""
import itertools

import numpy as np
import pytest

from poset_metrics.core.errors import NotAJoinSemilatticeError
from poset_metrics.core.poset import Poset, build_poset
from poset_metrics.core.predicates import (
    find_semimodular_violation,
    has_lower_filtering,
    has_upper_filtering,
    is_join_semilattice,
    is_jordan_dedekind,
    is_lattice,
    is_semimodular_cover,
    is_semimodular_height,
    is_tree_order,
    structural_report,
)
from poset_metrics.enumeration import enumerate_posets
from poset_metrics.families import (
    antichain,
    boolean,
    chain,
    chebyshev_witness,
    grid,
    pentagon,
    prop4_witness,
)


class TestStructuralReport:
    """Test cases for structural_report"""

    def test_chain_satisfies_everything(self):
        report = structural_report(chain(4))
        assert all(
            value for key, value in report.model_dump().items() if key not in ("element_count", "cover_edge_count")
        )
        assert report.element_count == 4
        assert report.cover_edge_count == 3

    def test_pentagon(self):
        """Test the pentagon is a lattice without the Jordan-Dedekind condition"""
        report = structural_report(pentagon())
        assert report.connected
        assert report.lattice
        assert not report.jordan_dedekind
        assert not report.semimodular
        assert not report.tree_order

    def test_antichain(self):
        report = structural_report(antichain(2))
        assert not report.connected
        assert not report.upper_filtering
        assert not report.lower_filtering
        assert not report.join_semilattice
        assert report.jordan_dedekind

    def test_singleton(self):
        report = structural_report(antichain(1))
        assert report.connected and report.lattice and report.tree_order and report.semimodular

    def test_cube(self):
        report = structural_report(boolean(3))
        assert report.lattice and report.semimodular and report.jordan_dedekind
        assert not report.tree_order


class TestPredicates:
    """Test cases for the individual predicates"""

    def setup_method(self):
        self.vee = build_poset([("a", "top"), ("b", "top")])
        self.wedge = build_poset([("bottom", "a"), ("bottom", "b")])

    def test_filtering(self):
        assert has_upper_filtering(self.vee) and not has_lower_filtering(self.vee)
        assert has_lower_filtering(self.wedge) and not has_upper_filtering(self.wedge)

    def test_tree_order(self):
        """Test a vee is a tree order but not a lattice"""
        assert is_tree_order(self.vee)
        assert is_join_semilattice(self.vee)
        assert not is_lattice(self.vee)
        assert not is_tree_order(self.wedge)

    def test_semimodular_cover(self):
        assert is_semimodular_cover(boolean(3))
        assert is_semimodular_cover(grid(3, 3))
        assert not is_semimodular_cover(prop4_witness())

    def test_semimodular_violation_names_the_pattern(self):
        """Test y is covered by x and z while x v z does not cover x"""
        assert find_semimodular_violation(prop4_witness()) == ("y", "x", "z")

    def test_semimodular_needs_join_semilattice(self):
        with pytest.raises(NotAJoinSemilatticeError):
            is_semimodular_cover(self.wedge)
        with pytest.raises(NotAJoinSemilatticeError):
            is_semimodular_height(antichain(2))

    def test_height_form_agrees_on_families(self):
        for poset in (boolean(3), grid(2, 3), pentagon(), prop4_witness(), chebyshev_witness(), chain(3)):
            assert is_semimodular_height(poset) == is_semimodular_cover(poset)

    def test_same_side_fails_on_chain(self):
        assert not is_semimodular_height(chain(3), same_side=True)
        assert is_semimodular_height(chain(3))

    def test_jordan_dedekind(self):
        assert not is_jordan_dedekind(pentagon())
        assert not is_jordan_dedekind(chebyshev_witness())
        assert is_jordan_dedekind(boolean(3))

    def test_dual_swaps_filtering(self):
        for poset in (self.vee, self.wedge, pentagon(), antichain(3)):
            assert has_upper_filtering(poset) == has_lower_filtering(poset.dual())
            assert structural_report(poset.dual().dual()) == structural_report(poset)


class TestHeightFormRelabeling:
    """Test cases for relabeling invariance of the height forms"""

    def setup_method(self):
        self.rng = np.random.default_rng(11)
        self.skewed = build_poset([("e0", "e1"), ("e0", "e2"), ("e1", "e4"), ("e2", "e3"), ("e3", "e4")])

    @staticmethod
    def _relabel(poset: Poset, permutation) -> Poset:
        permutation = np.asarray(permutation)
        names = [poset.names[k] for k in permutation]
        return Poset.from_matrix(names, poset.leq_matrix[np.ix_(permutation, permutation)])

    @pytest.mark.parametrize("same_side", [False, True])
    def test_every_labeling_of_skewed_pentagon(self, same_side):
        expected = is_semimodular_height(self.skewed, same_side=same_side)
        for permutation in itertools.permutations(range(5)):
            relabeled = self._relabel(self.skewed, permutation)
            assert is_semimodular_height(relabeled, same_side=same_side) == expected

    @pytest.mark.parametrize("same_side", [False, True])
    def test_enumerated_semilattices(self, same_side):
        for poset in enumerate_posets(5):
            if not is_join_semilattice(poset):
                continue
            expected = is_semimodular_height(poset, same_side=same_side)
            for _ in range(4):
                relabeled = self._relabel(poset, self.rng.permutation(len(poset)))
                assert is_semimodular_height(relabeled, same_side=same_side) == expected
