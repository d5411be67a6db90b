"""
Unit tests for the MCP tool implementations
"""
from poset_metrics.cli.posetfile import parse_poset_text
from poset_metrics.server import tools

PENTAGON = "0 < a\na < 1\n0 < b\nb < c\nc < 1\n"
TREE = "kid1 < parent\nkid2 < parent\n"


class TestTools:
    """Test cases for the tool payloads"""

    def test_check_poset(self):
        report = tools.check_poset(PENTAGON)
        assert report["lattice"] is True
        assert report["jordan_dedekind"] is False
        assert report["element_count"] == 5

    def test_poset_distance(self):
        payload = tools.poset_distance(PENTAGON, "chebyshev", "a", "b")
        assert payload == {"kind": "chebyshev", "x": "a", "y": "b", "distance": 2}

    def test_check_metric(self):
        payload = tools.check_metric(PENTAGON, "zigzag")
        assert payload["metric"] is True
        assert payload["violations"] == []

    def test_list_maximal_chains(self):
        assert tools.list_maximal_chains(TREE) == {"chains": [["kid1", "parent"], ["kid2", "parent"]]}

    def test_kinship_degree(self):
        payload = tools.kinship_degree(TREE, "civil", "kid1", "kid2")
        assert payload["degree"] == 2
        assert payload["ancestor"] == "parent"

    def test_generate_family(self):
        payload = tools.generate_family("boolean:2")
        assert payload["elements"] == 4
        assert len(parse_poset_text(payload["poset_text"])) == 4

    def test_run_verification(self, monkeypatch):
        monkeypatch.delenv("POSET_METRICS_CONFIG", raising=False)
        payload = tools.run_verification("P5", max_n=4)
        assert payload["holds"] is True
        assert payload["proposition"] == "P5"


class TestToolErrors:
    """Test cases for error payloads"""

    def test_parse_error(self):
        assert "error" in tools.check_poset("a > b\n")

    def test_unknown_element(self):
        assert "error" in tools.poset_distance(PENTAGON, "zigzag", "a", "z")

    def test_unknown_kind(self):
        assert "error" in tools.check_metric(PENTAGON, "euclid")

    def test_kinship_on_non_tree(self):
        assert "error" in tools.kinship_degree(PENTAGON, "canon", "a", "b")

    def test_unknown_method(self):
        assert "error" in tools.kinship_degree(TREE, "roman", "kid1", "kid2")

    def test_bad_family(self):
        assert "error" in tools.generate_family("grid:1")

    def test_size_cap(self):
        assert "error" in tools.run_verification("P3", max_n=9)

    def test_zero_size_is_rejected(self, monkeypatch):
        monkeypatch.delenv("POSET_METRICS_CONFIG", raising=False)
        monkeypatch.delenv("POSET_METRICS_MAX_N", raising=False)
        assert "error" in tools.run_verification("P3", max_n=0)
