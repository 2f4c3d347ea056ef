from typing import Iterable, Tuple
from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class GridLabel(BaseModel):
    """Strictly increasing tower indices (i1 < ... < im) of a solution"""
    model_config = ConfigDict(frozen=True)

    indices: Tuple[int, ...]

    @field_validator('indices')
    @classmethod
    def validate_indices(cls, v):
        if not v:
            raise ValueError("A grid needs at least one index")
        if v[0] < 0:
            raise ValueError("Grid indices must be non-negative")
        if any(b <= a for a, b in zip(v, v[1:])):
            raise ValueError("Grid indices must be strictly increasing")
        return v

    @classmethod
    def parse(cls, text: str) -> "GridLabel":
        """Parse '0,5', '(0,5)' or '0 5'"""
        cleaned = text.strip().strip('()[]{}')
        parts = [p for p in cleaned.replace(' ', ',').split(',') if p]
        try:
            return cls(indices=tuple(int(p) for p in parts))
        except ValueError as e:
            raise ValueError(f"Malformed grid '{text}': {e}") from None

    @property
    def m(self) -> int:
        return len(self.indices)

    def is_adjacent(self) -> bool:
        """True for the interacting pairs (i, i+1)"""
        return len(self.indices) == 2 and self.indices[1] == self.indices[0] + 1

    def to_beta(self, n: int) -> "BetaVector":
        return BetaVector.from_grid(n, self.indices)

    def __str__(self) -> str:
        return "(" + ",".join(str(i) for i in self.indices) + ")"


class BetaVector(BaseModel):
    """Projector selection beta in {0,1}^n of weight m, 1 <= m <= n-1"""
    model_config = ConfigDict(frozen=True)

    n: int
    bits: Tuple[int, ...]

    @field_validator('bits')
    @classmethod
    def validate_bits(cls, v):
        if any(b not in (0, 1) for b in v):
            raise ValueError("Every beta_j must be 0 or 1")
        return v

    @model_validator(mode='after')
    def validate_weight(self):
        if self.n < 2:
            raise ValueError("The target dimension n must be at least 2")
        if len(self.bits) != self.n:
            raise ValueError(f"Expected {self.n} bits, got {len(self.bits)}")
        if not 1 <= sum(self.bits) <= self.n - 1:
            raise ValueError(
                f"Weight m={sum(self.bits)} must satisfy 1 <= m <= n-1={self.n - 1}"
            )
        return self

    @classmethod
    def from_grid(cls, n: int, indices: Iterable[int]) -> "BetaVector":
        given = list(indices)
        chosen = set(given)
        if len(chosen) != len(given):
            raise ValueError(f"Grid {given} repeats an index")
        if any(i < 0 or i >= n for i in chosen):
            raise ValueError(f"Grid {sorted(chosen)} does not fit in dimension n={n}")
        return cls(n=n, bits=tuple(1 if j in chosen else 0 for j in range(n)))

    @property
    def m(self) -> int:
        return sum(self.bits)

    @property
    def grid(self) -> GridLabel:
        return GridLabel(indices=tuple(j for j, b in enumerate(self.bits) if b))

    def bit(self, j: int) -> int:
        """beta_j with the boundary convention beta_{-1} = beta_n = 0"""
        if j < 0 or j >= self.n:
            return 0
        return self.bits[j]

    def complement(self) -> "BetaVector":
        return BetaVector(n=self.n, bits=tuple(1 - b for b in self.bits))

    def reversal(self) -> "BetaVector":
        return BetaVector(n=self.n, bits=tuple(reversed(self.bits)))

    def __str__(self) -> str:
        return f"{self.grid} in G({self.m},{self.n})"
