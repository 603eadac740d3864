from pydantic import BaseModel, Field
from typing import List, Optional, Tuple


class CriterionReport(BaseModel):
    """Cross-check of a closed-form ternary criterion against search."""
    form: Tuple[int, ...]
    bound: int
    domain: str
    checked: int
    disagreements: List[int] = Field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.disagreements


class QuaternaryTable(BaseModel):
    """Depth-four escalation children split by bounded universality."""
    bound: int
    universal: List[Tuple[int, ...]] = Field(default_factory=list)
    truants: List[Tuple[Tuple[int, ...], int]] = Field(default_factory=list)


class VerifySummaryRow(BaseModel):
    """One line of the verify-all summary table."""
    theorem_id: str
    label: str = ""
    bound: int
    verdict: str
    failure_n: Optional[int] = None
    failure_claim: Optional[str] = None
    exceptions: str = ""
    sha256: str
