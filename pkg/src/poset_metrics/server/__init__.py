"""Server Module - MCP tool server over the poset library"""

__all__ = ["server", "tools"]
