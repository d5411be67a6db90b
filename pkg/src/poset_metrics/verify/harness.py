"""
Exhaustive verification harness
Every isomorphism class up to n_max is scanned; posets meeting a
proposition's hypothesis are run through its named checks, and each failed
check becomes a replayable Witness.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from ..core.poset import Poset
from ..core.predicates import (
    find_semimodular_violation,
    has_lower_filtering,
    has_upper_filtering,
    is_join_semilattice,
    is_jordan_dedekind,
    is_semimodular_cover,
    is_semimodular_height,
    is_tree_order,
)
from ..enumeration import ENUMERATION_CAP, check_size, isomorphism_classes, poset_from_code
from ..metrics.chains import chain_compatibility, longest_chain, shortest_chain
from ..metrics.distances import DistanceKind, distance_matrix
from ..metrics.metric_checks import triangle_violations
from .models import PropositionId, SizeTally, VerifyReport, Witness, WitnessPoset

logger = logging.getLogger(__name__)

Detail = dict[str, Any]


# Named checks: each returns the violation detail, or None when the check passes

def _triangle(poset: Poset, kind: DistanceKind) -> Optional[Detail]:
    violations = triangle_violations(poset, kind)
    return violations[0].model_dump() if violations else None


def _chebyshev_triangle(poset: Poset) -> Optional[Detail]:
    return _triangle(poset, DistanceKind.CHEBYSHEV)


def _semimodular_flag(poset: Poset) -> Optional[Detail]:
    if not is_join_semilattice(poset):
        return {"join_semilattice": False}
    violation = find_semimodular_violation(poset)
    if violation is None:
        return None
    z, x, y = violation
    return {"join_semilattice": True, "z": z, "x": x, "y": y}


def _kinship_bounds(poset: Poset) -> Optional[Detail]:
    """canon <= civil <= 2 * canon on every pair"""
    civil = distance_matrix(poset, DistanceKind.UP_DOWN)
    canon = distance_matrix(poset, DistanceKind.CHEBYSHEV)
    broken = np.argwhere((canon > civil) | (civil > 2 * canon))
    if broken.size == 0:
        return None
    i, j = broken[0]
    return {
        "ego": poset.names[i],
        "alter": poset.names[j],
        "civil": int(civil[i, j]),
        "canon": int(canon[i, j]),
    }


def _first_jd_failure(poset: Poset) -> Optional[tuple[int, int]]:
    differs = np.argwhere(poset.height_matrix != poset.max_height_matrix)
    if differs.size == 0:
        return None
    return int(differs[0][0]), int(differs[0][1])


def _jordan_dedekind(poset: Poset) -> Optional[Detail]:
    pair = _first_jd_failure(poset)
    if pair is None:
        return None
    i, j = pair
    return {
        "x": poset.names[i],
        "y": poset.names[j],
        "height": int(poset.height_matrix[i, j]),
        "max_height": int(poset.max_height_matrix[i, j]),
    }


def _jd_vs_zigzag_compatibility(poset: Poset) -> Optional[Detail]:
    jordan_dedekind = is_jordan_dedekind(poset)
    verdict = chain_compatibility(poset, DistanceKind.ZIGZAG)
    if jordan_dedekind == verdict.compatible:
        return None
    return {
        "jordan_dedekind": jordan_dedekind,
        "zigzag_chain_compatible": verdict.compatible,
        "chain": verdict.chain,
        "i": verdict.i,
        "j": verdict.j,
        "distance": verdict.distance,
    }


def _falsifier_mismatch(poset: Poset) -> Optional[Detail]:
    """A Jordan-Dedekind failure must yield two maximal chains of different sizes"""
    if is_jordan_dedekind(poset):
        return None
    found = falsify_chain_compatibility(poset)
    if found is not None and found.detail["short_size"] < found.detail["long_size"]:
        return None
    return {"jordan_dedekind": False, "falsifier": found.detail if found else None}


def _up_down_equivalence(poset: Poset) -> Optional[Detail]:
    """semimodular, up-down metric and up-down = zigzag agree"""
    semimodular = is_semimodular_cover(poset)
    up_down = distance_matrix(poset, DistanceKind.UP_DOWN)
    metric = not triangle_violations(poset, DistanceKind.UP_DOWN)
    equal = bool(np.array_equal(up_down, distance_matrix(poset, DistanceKind.ZIGZAG)))
    if semimodular == metric == equal:
        return None
    return {
        "semimodular": semimodular,
        "up_down_metric": metric,
        "up_down_equals_zigzag": equal,
    }


def _semimodular_forms(poset: Poset) -> Optional[Detail]:
    cover = is_semimodular_cover(poset)
    height = is_semimodular_height(poset)
    if cover == height:
        return None
    return {"cover_form": cover, "height_form": height}


CHECKS: dict[str, Callable[[Poset], Optional[Detail]]] = {
    "chebyshev_triangle": _chebyshev_triangle,
    "semimodular_flag": _semimodular_flag,
    "kinship_bounds": _kinship_bounds,
    "jordan_dedekind": _jordan_dedekind,
    "jd_vs_zigzag_compatibility": _jd_vs_zigzag_compatibility,
    "falsifier_mismatch": _falsifier_mismatch,
    "up_down_equivalence": _up_down_equivalence,
    "semimodular_forms": _semimodular_forms,
}


def _semimodular_semilattice(poset: Poset) -> bool:
    return is_join_semilattice(poset) and is_semimodular_cover(poset)


def _filtered(poset: Poset) -> bool:
    return has_upper_filtering(poset) or has_lower_filtering(poset)


@dataclass(frozen=True)
class _Plan:
    hypothesis: Callable[[Poset], bool]
    checks: tuple[str, ...]
    notes: tuple[str, ...] = ()


_PLANS: dict[PropositionId, _Plan] = {
    PropositionId.P1: _Plan(
        is_tree_order,
        ("chebyshev_triangle", "semimodular_flag", "kinship_bounds"),
        (
            "tree orders are also checked to be semimodular join semilattices, "
            "so P1 is covered again as an instance of P5",
            "kinship consistency: canon <= civil <= 2 * canon on every pair",
        ),
    ),
    PropositionId.P2: _Plan(
        _filtered,
        ("jd_vs_zigzag_compatibility", "falsifier_mismatch"),
        (
            "existence of some chain-compatible distance is decided by reduction: "
            "zigzag compatibility is sufficient, and two maximal chains of one "
            "interval with different sizes rule every chain-compatible distance out",
        ),
    ),
    PropositionId.P3: _Plan(_semimodular_semilattice, ("jordan_dedekind",)),
    PropositionId.P4: _Plan(is_join_semilattice, ("up_down_equivalence",)),
    PropositionId.P5: _Plan(_semimodular_semilattice, ("chebyshev_triangle",)),
    PropositionId.CHEB_SEARCH: _Plan(
        is_join_semilattice,
        ("chebyshev_triangle",),
        (
            "holds means a join semilattice with a Chebyshev triangle failure was found",
            "the converse of P5 is not claimed; observations count non-semimodular "
            "semilattices on which Chebyshev is still a metric",
        ),
    ),
    PropositionId.SM_EQUIV: _Plan(
        is_join_semilattice,
        ("semimodular_forms",),
        (
            "compares the cover form of semimodularity with the height form over all ordered pairs",
            "same_side_disagreements counts where the height form measured against "
            "h(z, x) instead of h(z, y) disagrees with the cover form",
        ),
    ),
}


def _observe(prop: PropositionId, poset: Poset, failures: list[tuple[str, Detail]]) -> dict[str, int]:
    """Extra per-poset counters reported alongside the verdict"""
    if prop is PropositionId.P1:
        return {"semimodular_tree_orders": int(_semimodular_semilattice(poset))}
    if prop is PropositionId.P2:
        return {"jordan_dedekind_failures": int(not is_jordan_dedekind(poset))}
    if prop is PropositionId.P4:
        return {"semimodular": int(is_semimodular_cover(poset))}
    if prop is PropositionId.CHEB_SEARCH:
        semimodular = is_semimodular_cover(poset)
        chebyshev = distance_matrix(poset, DistanceKind.CHEBYSHEV)
        zigzag = distance_matrix(poset, DistanceKind.ZIGZAG)
        return {
            "non_semimodular": int(not semimodular),
            "non_semimodular_chebyshev_metric": int(not semimodular and not failures),
            "chebyshev_exceeds_zigzag": int(bool((chebyshev > zigzag).any())),
        }
    if prop is PropositionId.SM_EQUIV:
        same_side = is_semimodular_height(poset, same_side=True)
        return {"same_side_disagreements": int(same_side != is_semimodular_cover(poset))}
    return {}


@dataclass
class _Outcome:
    relevant: bool
    failures: list[tuple[str, Detail]] = field(default_factory=list)
    observations: dict[str, int] = field(default_factory=dict)


def _evaluate(prop: PropositionId, poset: Poset) -> _Outcome:
    plan = _PLANS[prop]
    if not plan.hypothesis(poset):
        return _Outcome(relevant=False)
    failures = []
    for name in plan.checks:
        detail = CHECKS[name](poset)
        if detail is not None:
            failures.append((name, detail))
    return _Outcome(True, failures, _observe(prop, poset, failures))


def _evaluate_batch(job: tuple[PropositionId, list[bytes]]) -> list[_Outcome]:
    prop, codes = job
    return [_evaluate(prop, poset_from_code(code)) for code in codes]


def _evaluate_level(prop: PropositionId, codes: tuple[bytes, ...], jobs: int) -> list[_Outcome]:
    if jobs <= 1 or len(codes) < 2:
        return _evaluate_batch((prop, list(codes)))
    size = -(-len(codes) // (jobs * 4))
    batches = [(prop, list(codes[k:k + size])) for k in range(0, len(codes), size)]
    outcomes: list[_Outcome] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps batch order, so outcomes stay aligned with codes
        for part in pool.map(_evaluate_batch, batches):
            outcomes.extend(part)
    return outcomes


def verify(
    prop: PropositionId | str,
    n_max: int,
    jobs: int = 1,
    max_witnesses: Optional[int] = None,
    cap: int = ENUMERATION_CAP,
) -> VerifyReport:
    """
    Run one proposition over every poset with at most n_max elements

    Args:
        prop: Proposition to check
        n_max: Largest size scanned, at most the enumeration cap
        jobs: Worker processes; the report does not depend on it
        max_witnesses: Keep at most this many witnesses (None keeps all)
        cap: Optional lower size cap from configuration

    Returns:
        VerifyReport with witnesses in (size, canonical code) order
    """
    prop = PropositionId.parse(prop) if isinstance(prop, str) else prop
    check_size(n_max, cap)
    if max_witnesses is not None and max_witnesses < 1:
        max_witnesses = 1

    scanned = relevant = violations = 0
    witnesses: list[Witness] = []
    per_size: list[SizeTally] = []
    observations: dict[str, int] = {}

    for n in range(1, n_max + 1):
        codes = isomorphism_classes(n, jobs)
        outcomes = _evaluate_level(prop, codes, jobs)
        level_relevant = 0
        for code, outcome in zip(codes, outcomes):
            if not outcome.relevant:
                continue
            level_relevant += 1
            for key, value in outcome.observations.items():
                observations[key] = observations.get(key, 0) + value
            for check, detail in outcome.failures:
                violations += 1
                if max_witnesses is None or len(witnesses) < max_witnesses:
                    witnesses.append(Witness(
                        check=check,
                        poset=WitnessPoset.from_poset(poset_from_code(code)),
                        canonical_code=code.hex(),
                        detail=detail,
                    ))
        scanned += len(codes)
        relevant += level_relevant
        per_size.append(SizeTally(n=n, scanned=len(codes), relevant=level_relevant))
        logger.info(f"{prop.value} n={n}: {level_relevant}/{len(codes)} relevant, {violations} violations so far")

    holds = bool(witnesses) if prop is PropositionId.CHEB_SEARCH else not witnesses
    return VerifyReport(
        proposition=prop,
        n_max=n_max,
        scanned=scanned,
        relevant=relevant,
        holds=holds,
        violations=violations,
        witnesses=witnesses,
        per_size=per_size,
        observations=observations,
        notes=list(_PLANS[prop].notes),
    )


def falsify_chain_compatibility(poset: Poset) -> Optional[Witness]:
    """
    Two maximal chains of one interval with different sizes, if any exist

    Such a pair rules out every chain-compatible distance on the poset. The
    interval is the first pair in element order whose shortest and longest
    cover paths differ.
    """
    pair = _first_jd_failure(poset)
    if pair is None:
        return None
    x, y = poset.names[pair[0]], poset.names[pair[1]]
    short = shortest_chain(poset, x, y)
    long = longest_chain(poset, x, y)
    logger.debug(f"Interval [{x}, {y}] has maximal chains of sizes {len(short)} and {len(long)}")
    return Witness(
        check="two_chain_falsifier",
        poset=WitnessPoset.from_poset(poset),
        detail={
            "x": x,
            "y": y,
            "short_chain": short,
            "long_chain": long,
            "short_size": len(short),
            "long_size": len(long),
        },
    )


def replay_witness(witness: Witness) -> Optional[Detail]:
    """Re-run the witness's check on its embedded poset and return the fresh detail"""
    poset = witness.to_poset()
    if witness.check == "two_chain_falsifier":
        found = falsify_chain_compatibility(poset)
        return found.detail if found else None
    return CHECKS[witness.check](poset)
