from enum import Enum
from pydantic import BaseModel, Field
from typing import Dict, List, Optional, Tuple


class CertificateVerdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class ClaimFailure(BaseModel):
    """Smallest counterexample found by a verification run."""
    n: int
    claim: str
    detail: str


class SampleWitness(BaseModel):
    """Octagonal witness for one integer, with the sum it belongs to."""
    n: int
    coeffs: Tuple[int, ...]
    xs: Tuple[int, ...]


class Certificate(BaseModel):
    """Persisted record of one bounded verification run."""
    schema_version: int = 1
    theorem_id: str
    label: str = ""
    coeffs: Tuple[int, ...] = ()
    bound: int
    verdict: CertificateVerdict
    failure: Optional[ClaimFailure] = None
    expected_exceptions: List[int] = Field(default_factory=list)
    exceptions: List[int] = Field(default_factory=list)
    direct_threshold: Optional[int] = None
    claims_checked: Dict[str, int] = Field(default_factory=dict)
    sample_witnesses: List[SampleWitness] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    engine_version: str
    elapsed: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        return self.verdict == CertificateVerdict.PASS
