"""Verify Module - exhaustive proposition checks with replayable witnesses"""

from .harness import CHECKS, falsify_chain_compatibility, replay_witness, verify
from .models import PropositionId, SizeTally, VerifyReport, Witness, WitnessPoset

__all__ = [
    "CHECKS",
    "falsify_chain_compatibility",
    "replay_witness",
    "verify",
    "PropositionId",
    "SizeTally",
    "VerifyReport",
    "Witness",
    "WitnessPoset",
]
