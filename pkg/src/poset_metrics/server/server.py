"""
Poset Metrics MCP Server - poset distances and the verification harness as MCP tools
"""
import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from fastmcp import FastMCP

from ..config import load_settings
from ..utils import configure_logging
from . import tools

logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

mcp = FastMCP("Poset Metrics MCP Server")


@mcp.prompt()
def poset_metrics_prompt() -> str:
    """System prompt for the poset tools"""
    return """You help users study distances on finite partially ordered sets.

    Posets are passed as poset files: one "a < b" or "element x" per line,
    '#' starts a comment. Use check_poset for structure, poset_distance for
    zigzag, updown, downup or chebyshev distances, check_metric for triangle
    inequality scans and run_verification for exhaustive checks over all
    small posets.
    """


@mcp.tool()
def check_poset(poset_text: str) -> Dict[str, Any]:
    """
    Structural report of a poset: connectivity, filtering, semilattice,
    lattice, tree order, semimodularity and Jordan-Dedekind flags.
    """
    return tools.check_poset(poset_text)


@mcp.tool()
def poset_distance(poset_text: str, kind: str, x: str, y: str) -> Dict[str, Any]:
    """
    Distance between two elements.

    Args:
        poset_text: Poset file text
        kind: zigzag, updown, downup or chebyshev
        x: First element
        y: Second element
    """
    return tools.poset_distance(poset_text, kind, x, y)


@mcp.tool()
def check_metric(poset_text: str, kind: str) -> Dict[str, Any]:
    """List every triangle-inequality violation of a distance on the poset"""
    return tools.check_metric(poset_text, kind)


@mcp.tool()
def list_maximal_chains(poset_text: str) -> Dict[str, Any]:
    """Maximal chains, bottom to top"""
    return tools.list_maximal_chains(poset_text)


@mcp.tool()
def kinship_degree(poset_text: str, method: str, ego: str, alter: str) -> Dict[str, Any]:
    """
    Degree of kinship in a family tree given as "child < parent" lines.

    Args:
        method: civil (generations summed) or canon (larger side)
    """
    return tools.kinship_degree(poset_text, method, ego, alter)


@mcp.tool()
def generate_family(family: str) -> Dict[str, Any]:
    """Generate a named family, e.g. boolean:3, grid:3x4, pentagon or random:8:0.3:42"""
    return tools.generate_family(family)


@mcp.tool()
def run_verification(proposition: str, max_n: Optional[int] = None) -> Dict[str, Any]:
    """
    Check a proposition over every poset up to max_n elements.

    Args:
        proposition: P1..P5, cheb-search or sm-equiv
        max_n: Largest size scanned (at most 8)
    """
    return tools.run_verification(proposition, max_n)


def main() -> None:
    configure_logging(load_settings().log_level)
    transport = os.getenv("MCP_TRANSPORT", "stdio")
    if transport == "stdio":
        logger.info("Starting Poset Metrics MCP Server on stdio")
        mcp.run()
    else:
        port = int(os.getenv("PORT", 8080))
        logger.info(f"Starting Poset Metrics MCP Server ({transport}) on port {port}")
        mcp.run(transport=transport, host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
