"""
Unit tests for family specs and generators
"""
import numpy as np
import pytest

from poset_metrics.core.errors import InvalidParameterError
from poset_metrics.core.predicates import (
    is_join_semilattice,
    is_semimodular_cover,
)
from poset_metrics.families import (
    FamilySpec,
    antichain,
    boolean,
    chain,
    chebyshev_witness,
    generate,
    grid,
    pentagon,
    prop4_witness,
    random_poset,
)


class TestFamilySpec:
    """Test cases for FamilySpec parsing and validation"""

    @pytest.mark.parametrize(
        "text, family, params, seed",
        [
            ("chain:5", "chain", (5,), 0),
            ("boolean:3", "boolean", (3,), 0),
            ("grid:3x4", "grid", (3, 4), 0),
            ("pentagon", "pentagon", (), 0),
            ("prop4-witness", "prop4_witness", (), 0),
            ("chebyshev-witness", "chebyshev_witness", (), 0),
            ("random:8:0.3:42", "random", (8, 0.3), 42),
        ],
    )
    def test_parse(self, text, family, params, seed):
        spec = FamilySpec.parse(text)
        assert spec.family == family
        assert spec.params == params
        assert spec.seed == seed

    def test_str_round_trip(self):
        for text in ("chain:5", "grid:3x4", "pentagon", "prop4-witness", "random:8:0.3:42"):
            assert str(FamilySpec.parse(text)) == text

    @pytest.mark.parametrize(
        "text",
        ["chain:0", "boolean:11", "grid:1x4", "random:8:1.5", "pentagon:3", "nonsense", "chain:x"],
    )
    def test_invalid(self, text):
        with pytest.raises(InvalidParameterError):
            FamilySpec.parse(text)


class TestGenerators:
    """Test cases for the family generators"""

    def test_sizes(self):
        assert len(chain(4)) == 4
        assert len(antichain(3)) == 3
        assert len(grid(3, 4)) == 12
        cube = boolean(3)
        assert len(cube) == 8
        assert cube.cover_edge_count == 12

    def test_boolean_covers_are_insertions(self):
        assert boolean(0).cover_edge_count == 0
        for k in range(1, 6):
            assert boolean(k).cover_edge_count == k * 2 ** (k - 1)

    def test_grid_covers_are_unit_steps(self):
        square = grid(3, 4)
        for lower, upper in square.cover_pairs:
            a = np.array([int(c) for c in lower.strip("()").split(",")])
            b = np.array([int(c) for c in upper.strip("()").split(",")])
            assert (b - a).sum() == 1 and (b >= a).all()

    def test_semimodular_families(self):
        for poset in (boolean(3), boolean(4), grid(3, 3), grid(2, 3, 2)):
            assert is_join_semilattice(poset)
            assert is_semimodular_cover(poset)

    def test_witnesses(self):
        """Test both witnesses are non-semimodular join semilattices"""
        for poset in (prop4_witness(), chebyshev_witness()):
            assert is_join_semilattice(poset)
            assert not is_semimodular_cover(poset)
        assert pentagon().cover_edge_count == 5

    def test_random_is_reproducible(self):
        assert random_poset(8, 0.3, 42) == random_poset(8, 0.3, 42)
        assert generate("random:8:0.3:42") == random_poset(8, 0.3, 42)

    def test_random_extremes(self):
        assert random_poset(6, 0.0, 1).cover_edge_count == 0
        assert random_poset(6, 1.0, 1).cover_edge_count == 5

    def test_generate_accepts_spec(self):
        assert generate(FamilySpec("chain", (3,))) == chain(3)
