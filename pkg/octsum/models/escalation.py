from enum import Enum
from pydantic import BaseModel, Field
from typing import Any, Dict, Iterator, List, Optional

from .octsum import OctSum


class NodeStatus(str, Enum):
    TRUANT = "truant"
    BOUNDED_UNIVERSAL = "bounded-universal"


class Verdict(str, Enum):
    UNIVERSAL_BY_CRITERION = "universal-by-criterion"
    NOT_UNIVERSAL = "not-universal"
    BOUNDED_UNIVERSAL_UNPROVEN = "bounded-universal-unproven"


class EscalationNode(BaseModel):
    """One coefficient vector of the escalation tree."""
    sum: OctSum
    status: NodeStatus
    truant_value: Optional[int] = None
    bound: int
    provenance: Optional[str] = None  # result that proves the sum universal, if any
    children: List["EscalationNode"] = Field(default_factory=list)

    @property
    def depth(self) -> int:
        return self.sum.k

    def walk(self) -> Iterator["EscalationNode"]:
        """Pre-order traversal, children in canonical order."""
        yield self
        for child in self.children:
            yield from child.walk()

    def max_depth(self) -> int:
        return max(node.depth for node in self.walk())

    def to_canonical(self) -> Dict[str, Any]:
        """JSON-ready structure with children sorted by coefficient vector."""
        return {
            "coeffs": list(self.sum.coeffs),
            "status": self.status.value,
            "truant": self.truant_value,
            "provenance": self.provenance,
            "children": [child.to_canonical() for child in sorted(self.children, key=lambda c: c.sum.coeffs)],
        }


class ClassificationReport(BaseModel):
    """Universality verdict for one sum."""
    sum: OctSum
    verdict: Verdict
    witness: Optional[int] = None  # first integer the sum misses
    checked_bound: int = 0


EscalationNode.model_rebuild()
