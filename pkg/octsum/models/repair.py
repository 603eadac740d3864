from enum import Enum
from pydantic import BaseModel
from typing import Tuple


class BinaryFormTag(str, Enum):
    X2_PLUS_2Y2 = "x^2+2y^2"
    X2_PLUS_3Y2 = "x^2+3y^2"


class BinaryRep(BaseModel):
    """Representation u^2 + c*v^2 of a binary sublattice value."""
    u: int
    v: int
    form: BinaryFormTag = BinaryFormTag.X2_PLUS_2Y2

    model_config = {
        "frozen": True
    }

    @property
    def norm(self) -> int:
        scale = 2 if self.form == BinaryFormTag.X2_PLUS_2Y2 else 3
        return self.u * self.u + scale * self.v * self.v

    def as_tuple(self) -> Tuple[int, int]:
        return self.u, self.v


class TauVector(BaseModel):
    """Solution (a, b, d) of x^2 + y^2 + 4t^2 = M."""
    a: int
    b: int
    d: int

    model_config = {
        "frozen": True
    }

    @property
    def norm(self) -> int:
        return self.a * self.a + self.b * self.b + 4 * self.d * self.d

    def as_tuple(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.d
