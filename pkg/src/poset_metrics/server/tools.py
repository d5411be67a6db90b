"""
Plain implementations behind the MCP tools
Every tool takes poset files as text and returns a JSON-ready dict; library
errors come back as {"error": message}.
"""
import logging
from functools import wraps
from typing import Any, Callable, Optional

from ..cli.posetfile import parse_poset_text, render_poset
from ..config import load_settings
from ..core.errors import PosetError
from ..core.predicates import structural_report
from ..families import generate
from ..metrics import (
    DistanceKind,
    KinshipMethod,
    distance,
    kinship,
    maximal_chains,
    triangle_violations,
)
from ..verify import PropositionId, verify

logger = logging.getLogger(__name__)

Payload = dict[str, Any]


def _guarded(tool: Callable[..., Payload]) -> Callable[..., Payload]:
    @wraps(tool)
    def wrapper(*args: Any, **kwargs: Any) -> Payload:
        try:
            return tool(*args, **kwargs)
        except PosetError as e:
            logger.warning(f"{tool.__name__} rejected its input: {e}")
            return {"error": str(e)}
    return wrapper


@_guarded
def check_poset(poset_text: str) -> Payload:
    return structural_report(parse_poset_text(poset_text)).model_dump()


@_guarded
def poset_distance(poset_text: str, kind: str, x: str, y: str) -> Payload:
    selected = DistanceKind.parse(kind)
    value = distance(parse_poset_text(poset_text), selected, x, y)
    return {"kind": selected.value, "x": x, "y": y, "distance": value}


@_guarded
def check_metric(poset_text: str, kind: str) -> Payload:
    selected = DistanceKind.parse(kind)
    violations = triangle_violations(parse_poset_text(poset_text), selected)
    return {
        "kind": selected.value,
        "metric": not violations,
        "violations": [v.model_dump() for v in violations],
    }


@_guarded
def list_maximal_chains(poset_text: str) -> Payload:
    return {"chains": maximal_chains(parse_poset_text(poset_text))}


@_guarded
def kinship_degree(poset_text: str, method: str, ego: str, alter: str) -> Payload:
    if method not in ("civil", "canon"):
        return {"error": f"unknown kinship method {method!r}; expected civil or canon"}
    selected = KinshipMethod(method)
    result = kinship(parse_poset_text(poset_text), ego, alter)
    return {**result.model_dump(), "method": selected.value, "degree": result.degree(selected)}


@_guarded
def generate_family(family: str) -> Payload:
    poset = generate(family)
    return {"family": family, "poset_text": render_poset(poset), "elements": len(poset)}


@_guarded
def run_verification(proposition: str, max_n: Optional[int] = None) -> Payload:
    settings = load_settings()
    report = verify(
        PropositionId.parse(proposition),
        settings.default_max_n if max_n is None else max_n,
        jobs=settings.jobs,
        max_witnesses=settings.max_witnesses,
        cap=settings.enumeration_cap,
    )
    return report.model_dump(mode="json")
