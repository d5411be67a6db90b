"""CLI Module - poset files and the poset-metrics command line"""

from .posetfile import parse_poset_text, read_poset_file, render_poset, write_poset_file

__all__ = ["parse_poset_text", "read_poset_file", "render_poset", "write_poset_file"]
