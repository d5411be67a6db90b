"""
Poset file format

    # comment to end of line
    a < b          strict order assertion, not necessarily a cover
    element x      element related to nothing

Rendering writes exactly the cover relation sorted by (lower, upper) name,
then the unrelated elements sorted by name.
"""
import logging
from pathlib import Path

from ..core.errors import ParseError
from ..core.poset import Poset, build_poset

logger = logging.getLogger(__name__)


def parse_poset_text(text: str) -> Poset:
    """
    Parse poset file text

    Raises:
        ParseError: a data line is neither "a < b" nor "element x"
        PosetError: the assertions do not form a valid poset
    """
    relations: list[tuple[str, str]] = []
    isolated: list[str] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 3 and tokens[1] == "<":
            relations.append((tokens[0], tokens[2]))
        elif len(tokens) == 2 and tokens[0] == "element":
            isolated.append(tokens[1])
        else:
            raise ParseError(f"expected 'a < b' or 'element x', got {raw.strip()!r}", number)
    return build_poset(relations, isolated)


def read_poset_file(path: str | Path) -> Poset:
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise ParseError(f"not valid UTF-8 at byte {e.start}", line) from None
    poset = parse_poset_text(text)
    logger.debug(f"Read {len(poset)} elements from {path}")
    return poset


def render_poset(poset: Poset) -> str:
    covers = sorted(poset.cover_pairs)
    related = {name for pair in covers for name in pair}
    lines = [f"{lower} < {upper}" for lower, upper in covers]
    lines += [f"element {name}" for name in sorted(poset.names) if name not in related]
    return "".join(line + "\n" for line in lines)


def write_poset_file(poset: Poset, path: str | Path) -> None:
    Path(path).write_text(render_poset(poset), encoding="utf-8")
    logger.info(f"Wrote {len(poset)} elements to {path}")
