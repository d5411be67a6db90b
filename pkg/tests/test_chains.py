"""
Unit tests for maximal chains and chain compatibility
"""
import json

from poset_metrics.families import antichain, boolean, chain, pentagon
from poset_metrics.metrics import (
    DistanceKind,
    chain_compatibility,
    is_chain_compatible,
    longest_chain,
    maximal_chains,
    shortest_chain,
)


class TestMaximalChains:
    """Test cases for maximal_chains"""

    def test_chain(self):
        assert maximal_chains(chain(3)) == [["c0", "c1", "c2"]]

    def test_pentagon(self):
        assert maximal_chains(pentagon()) == [["0", "a", "1"], ["0", "b", "c", "1"]]

    def test_antichain(self):
        assert maximal_chains(antichain(2)) == [["a0"], ["a1"]]

    def test_cube_has_six_chains(self):
        chains = maximal_chains(boolean(3))
        assert len(chains) == 6
        assert all(len(c) == 4 and c[0] == "{}" and c[-1] == "{1,2,3}" for c in chains)

    def test_interval_chains(self):
        assert shortest_chain(pentagon(), "0", "1") == ["0", "a", "1"]
        assert longest_chain(pentagon(), "0", "1") == ["0", "b", "c", "1"]


class TestChainCompatibility:
    """Test cases for chain_compatibility"""

    def test_chain_all_kinds(self):
        for kind in DistanceKind:
            assert is_chain_compatible(chain(5), kind)

    def test_pentagon_zigzag(self):
        """Test zigzag(0, 1) = 2 breaks the long chain of the pentagon"""
        verdict = chain_compatibility(pentagon(), DistanceKind.ZIGZAG)
        assert not verdict.compatible
        assert verdict.chain == ["0", "b", "c", "1"]
        assert (verdict.i, verdict.j, verdict.distance) == (0, 3, 2)

    def test_cube_zigzag(self):
        verdict = chain_compatibility(boolean(3), DistanceKind.ZIGZAG)
        assert verdict.compatible
        assert verdict.chain is None

    def test_verdict_json(self):
        payload = json.loads(chain_compatibility(pentagon(), DistanceKind.ZIGZAG).model_dump_json())
        assert payload == {
            "kind": "zigzag",
            "compatible": False,
            "chain": ["0", "b", "c", "1"],
            "i": 0,
            "j": 3,
            "distance": 2,
        }
