"""
Degrees of kinship in a family tree
The tree is a tree order with ancestors upward (child < parent). The civil
law degree adds the generations from both relatives up to their nearest
common ancestor, the canon law degree takes the larger of the two.
"""
import logging
from enum import Enum

from pydantic import BaseModel

from ..core.errors import NotATreeOrderError
from ..core.poset import Poset
from ..core.predicates import is_tree_order
from .distances import chebyshev_distance, up_down_distance

logger = logging.getLogger(__name__)


class KinshipMethod(str, Enum):
    CIVIL = "civil"
    CANON = "canon"


class KinshipResult(BaseModel):
    """Nearest common ancestor and both degrees for a pair of relatives"""
    ego: str
    alter: str
    ancestor: str
    h_ego: int
    h_alter: int
    civil: int
    canon: int

    def degree(self, method: KinshipMethod) -> int:
        return self.civil if KinshipMethod(method) is KinshipMethod.CIVIL else self.canon


def kinship(poset: Poset, ego: str, alter: str) -> KinshipResult:
    """
    Compute the nearest common ancestor and both kinship degrees

    Args:
        poset: A tree order, child < parent
        ego: First relative
        alter: Second relative

    Returns:
        KinshipResult; civil is the up-down distance, canon the Chebyshev one
    """
    poset.index(ego)
    poset.index(alter)
    if not is_tree_order(poset):
        raise NotATreeOrderError(
            "kinship needs a tree order: every person has at most one parent line"
        )

    ancestor = poset.join(ego, alter)
    result = KinshipResult(
        ego=ego,
        alter=alter,
        ancestor=ancestor,
        h_ego=poset.height(ego, ancestor),
        h_alter=poset.height(alter, ancestor),
        civil=up_down_distance(poset, ego, alter),
        canon=chebyshev_distance(poset, ego, alter),
    )
    logger.debug(f"Kinship {ego}/{alter} via {ancestor}: civil={result.civil} canon={result.canon}")
    return result


def kinship_degree(poset: Poset, method: KinshipMethod, ego: str, alter: str) -> int:
    return kinship(poset, ego, alter).degree(method)
