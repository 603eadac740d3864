"""Registry of the per-sum constructions, keyed by theorem id."""

from typing import Callable, Dict

from ...schemas.theorem_schema import QUINARY_OVER_1137, TheoremId
from ...utils.error_utils import UnknownTheoremError
from .base import Pipeline
from .exceptional import Phi1134, Phi11214
from .quaternary import Phi1133, Phi1136, Phi1233, Phi1236, Phi1237, Phi1239
from .quinary import Phi1137Alpha, Phi11378, Phi113712

PIPELINES: Dict[TheoremId, Callable[[], Pipeline]] = {
    TheoremId.PHI_1133: Phi1133,
    TheoremId.PHI_1136: Phi1136,
    TheoremId.PHI_1236: Phi1236,
    TheoremId.PHI_1237: Phi1237,
    TheoremId.PHI_1239: Phi1239,
    TheoremId.PHI_11214: Phi11214,
    TheoremId.PHI_1134: Phi1134,
    TheoremId.PHI_1233: Phi1233,
    TheoremId.PHI_11378: Phi11378,
    TheoremId.PHI_113712: Phi113712,
}

for _alpha, _theorem_id in QUINARY_OVER_1137.items():
    if _theorem_id not in PIPELINES:
        PIPELINES[_theorem_id] = lambda theorem_id=_theorem_id: Phi1137Alpha(theorem_id)


def get_pipeline(theorem_id: TheoremId) -> Pipeline:
    """
    Fresh pipeline instance for a theorem id.

    Args:
        theorem_id: Any id except the criterion theorem

    Returns:
        Pipeline with zeroed claim counters
    """
    factory = PIPELINES.get(theorem_id)
    if factory is None:
        raise UnknownTheoremError(f"no construction pipeline for {theorem_id.value}")
    return factory()


__all__ = ["Pipeline", "PIPELINES", "get_pipeline"]
