from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, FrozenSet, Optional, Tuple


class DiagonalForm(BaseModel):
    """Diagonal quadratic form <a_1, ..., a_n>; entry order is kept as given."""
    coeffs: Tuple[int, ...]

    model_config = {
        "frozen": True
    }

    @field_validator("coeffs")
    @classmethod
    def _positive(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(a < 1 for a in value):
            raise ValueError(f"form entries must be positive, got {list(value)}")
        return value

    @classmethod
    def of(cls, *coeffs: int) -> "DiagonalForm":
        return cls(coeffs=tuple(coeffs))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def evaluate(self, ys: Tuple[int, ...]) -> int:
        return sum(a * y * y for a, y in zip(self.coeffs, ys))

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.coeffs) + ">"


class ResidueConstraint(BaseModel):
    """Per-variable sets of allowed residues modulo one modulus."""
    modulus: int = 1
    allowed: Tuple[FrozenSet[int], ...]

    model_config = {
        "frozen": True
    }

    @model_validator(mode="after")
    def _check_sets(self) -> "ResidueConstraint":
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        for residues in self.allowed:
            if not residues or any(r < 0 or r >= self.modulus for r in residues):
                raise ValueError(f"allowed residues {sorted(residues)} are not a non-empty subset of [0, {self.modulus})")
        return self

    @classmethod
    def trivial(cls, arity: int) -> "ResidueConstraint":
        return cls(modulus=1, allowed=tuple(frozenset({0}) for _ in range(arity)))

    @classmethod
    def nonzero_mod3(cls, arity: int, indices: Optional[Tuple[int, ...]] = None) -> "ResidueConstraint":
        """Variables in `indices` (all when None) must be prime to 3; the rest are free."""
        chosen = set(range(arity)) if indices is None else set(indices)
        return cls(
            modulus=3,
            allowed=tuple(frozenset({1, 2}) if i in chosen else frozenset({0, 1, 2}) for i in range(arity)),
        )

    def admits(self, index: int, value: int) -> bool:
        return value % self.modulus in self.allowed[index]


class RepProblem(BaseModel):
    """Solve sum a_i y_i^2 = target under residue constraints and optional pinned values."""
    form: DiagonalForm
    target: int
    constraint: ResidueConstraint
    pinned: Dict[int, int] = Field(default_factory=dict)

    model_config = {
        "frozen": True
    }

    @model_validator(mode="after")
    def _check_arity(self) -> "RepProblem":
        if len(self.constraint.allowed) != self.form.arity:
            raise ValueError(f"constraint arity {len(self.constraint.allowed)} does not match form arity {self.form.arity}")
        for index in self.pinned:
            if not 0 <= index < self.form.arity:
                raise ValueError(f"pinned index {index} out of range")
        return self


class FormWitness(BaseModel):
    """Integer vector y with sum a_i y_i^2 equal to the problem target."""
    ys: Tuple[int, ...]

    model_config = {
        "frozen": True
    }


class ExclusionRule(BaseModel):
    """
    Integers of the shape scale * 4^s * (8t + 7), plus integers failing an
    optional congruence `n = required_residue (mod required_modulus)`.

    A rule describes integers that a specific ternary form never represents.
    """
    scale: int = 1
    required_residue: Optional[int] = None
    required_modulus: Optional[int] = None

    model_config = {
        "frozen": True
    }
