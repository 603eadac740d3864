"""Theorem catalogue and the fixed tables the escalation must reproduce."""

from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple


class TheoremId(str, Enum):
    PHI_1133 = "phi-1-1-3-3"
    PHI_1136 = "phi-1-1-3-6"
    PHI_1236 = "phi-1-2-3-6"
    PHI_1237 = "phi-1-2-3-7"
    PHI_1239 = "phi-1-2-3-9"
    PHI_11214 = "phi-1-1-2-14"
    PHI_1134 = "phi-1-1-3-4"
    PHI_1233 = "phi-1-2-3-3"
    PHI_11377 = "phi-1-1-3-7-7"
    PHI_11379 = "phi-1-1-3-7-9"
    PHI_113710 = "phi-1-1-3-7-10"
    PHI_113711 = "phi-1-1-3-7-11"
    PHI_113713 = "phi-1-1-3-7-13"
    PHI_113714 = "phi-1-1-3-7-14"
    PHI_11378 = "phi-1-1-3-7-8"
    PHI_113712 = "phi-1-1-3-7-12"
    SIXTY = "sixty"


# Catalogue labels of the results, accepted wherever a theorem id is
RESULT_LABELS: Dict[TheoremId, str] = {
    TheoremId.PHI_1133: "T2.1",
    TheoremId.PHI_1136: "T2.2",
    TheoremId.PHI_1236: "T2.3",
    TheoremId.PHI_1237: "T2.4a",
    TheoremId.PHI_1239: "T2.4b",
    TheoremId.PHI_11214: "L3.2",
    TheoremId.PHI_1134: "L3.3",
    TheoremId.PHI_1233: "L3.4",
    TheoremId.PHI_11377: "L3.5-7",
    TheoremId.PHI_11379: "L3.5-9",
    TheoremId.PHI_113710: "L3.5-10",
    TheoremId.PHI_113711: "L3.5-11",
    TheoremId.PHI_113713: "L3.5-13",
    TheoremId.PHI_113714: "L3.5-14",
    TheoremId.PHI_11378: "L3.6",
    TheoremId.PHI_113712: "L3.7",
    TheoremId.SIXTY: "T3.1",
}


def theorem_coeffs(theorem_id: TheoremId) -> Tuple[int, ...]:
    """Coefficient vector certified by a theorem id (empty for the criterion theorem)."""
    if theorem_id == TheoremId.SIXTY:
        return ()
    return tuple(int(part) for part in theorem_id.value.split("-")[1:])


# Integers whose representation decides universality of any sum
CRITERION_INTEGERS: Tuple[int, ...] = (1, 2, 3, 4, 6, 7, 9, 12, 13, 14, 18, 60)

# (b, c, d) with Phi_{1,b,c,d} universal
CANDIDATE_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 1, 4), (1, 2, 2), (1, 2, 3), (1, 2, 4), (1, 2, 5),
    (1, 2, 6), (1, 2, 7), (1, 2, 8), (1, 2, 9), (1, 2, 10), (1, 2, 11), (1, 2, 12), (1, 2, 13),
    (1, 3, 3), (1, 3, 5), (1, 3, 6), (2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 2, 6),
    (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 3, 7), (2, 3, 8), (2, 3, 9), (2, 4, 4), (2, 4, 5),
    (2, 4, 6), (2, 4, 7), (2, 4, 8), (2, 4, 9), (2, 4, 10), (2, 4, 11), (2, 4, 12), (2, 4, 13),
)

# Triples of the table whose universality needed the dedicated constructions
CONJECTURED_TRIPLES: Dict[Tuple[int, int, int], TheoremId] = {
    (1, 3, 3): TheoremId.PHI_1133,
    (1, 3, 6): TheoremId.PHI_1136,
    (2, 3, 6): TheoremId.PHI_1236,
    (2, 3, 7): TheoremId.PHI_1237,
    (2, 3, 9): TheoremId.PHI_1239,
}

# Truants of every escalation node up to three coefficients
SHALLOW_TRUANTS: Dict[Tuple[int, ...], int] = {
    (): 1,
    (1,): 2,
    (1, 1): 3,
    (1, 2): 4,
    (1, 1, 1): 4,
    (1, 1, 2): 14,
    (1, 1, 3): 7,
    (1, 2, 2): 6,
    (1, 2, 3): 9,
    (1, 2, 4): 13,
}

# Quaternary escalations that are not universal, with their truants
QUATERNARY_TRUANTS: Dict[Tuple[int, ...], int] = {
    (1, 1, 2, 14): 60,
    (1, 1, 3, 4): 18,
    (1, 1, 3, 7): 14,
    (1, 2, 3, 3): 12,
}

# Quaternary sums missing exactly one positive integer
SINGLE_EXCEPTIONS: Dict[Tuple[int, ...], TheoremId] = {
    (1, 1, 2, 14): TheoremId.PHI_11214,
    (1, 1, 3, 4): TheoremId.PHI_1134,
    (1, 2, 3, 3): TheoremId.PHI_1233,
}

QUINARY_OVER_1137: Dict[int, TheoremId] = {
    7: TheoremId.PHI_11377,
    8: TheoremId.PHI_11378,
    9: TheoremId.PHI_11379,
    10: TheoremId.PHI_113710,
    11: TheoremId.PHI_113711,
    12: TheoremId.PHI_113712,
    13: TheoremId.PHI_113713,
    14: TheoremId.PHI_113714,
}

KNOWN_TABLE = "known-quaternary-table"


def candidate_quadruples() -> FrozenSet[Tuple[int, ...]]:
    return frozenset((1,) + triple for triple in CANDIDATE_TRIPLES)


def provenance_for(coeffs: Tuple[int, ...]) -> Optional[str]:
    """
    Name the result proving a sum universal, or None if no proof is on record.

    Args:
        coeffs: Canonical (non-decreasing) coefficient vector

    Returns:
        Provenance label
    """
    if len(coeffs) == 4 and coeffs[0] == 1:
        triple = coeffs[1:]
        if triple in CONJECTURED_TRIPLES:
            return f"theorem:{CONJECTURED_TRIPLES[triple].value}"
        if triple in CANDIDATE_TRIPLES:
            return KNOWN_TABLE

    if len(coeffs) == 5:
        head, last = coeffs[:4], coeffs[4]
        if head == (1, 1, 3, 7) and last in QUINARY_OVER_1137:
            return f"theorem:{QUINARY_OVER_1137[last].value}"
        if head in SINGLE_EXCEPTIONS and head[-1] <= last <= QUATERNARY_TRUANTS[head]:
            return f"exception-covered:{SINGLE_EXCEPTIONS[head].value}"

    return None
