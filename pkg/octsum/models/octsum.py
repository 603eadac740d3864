from pydantic import BaseModel, field_validator
from typing import Tuple


class OctSum(BaseModel):
    """Weighted sum of generalized octagonal numbers, stored in canonical order."""
    coeffs: Tuple[int, ...] = ()

    model_config = {
        "frozen": True
    }

    @field_validator("coeffs")
    @classmethod
    def _canonical(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(a < 1 for a in value):
            raise ValueError(f"coefficients must be positive, got {list(value)}")
        return tuple(sorted(value))

    @classmethod
    def of(cls, *coeffs: int) -> "OctSum":
        return cls(coeffs=tuple(coeffs))

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @property
    def key(self) -> str:
        """Canonical text key, e.g. "1,1,3,3" (empty string for the empty sum)."""
        return ",".join(str(a) for a in self.coeffs)

    def extend(self, c: int) -> "OctSum":
        return OctSum(coeffs=self.coeffs + (c,))

    def __str__(self) -> str:
        return f"Phi({self.key})"


class OctWitness(BaseModel):
    """Arguments x_1..x_k of P8 certifying one representation."""
    xs: Tuple[int, ...]

    model_config = {
        "frozen": True
    }
