from fractions import Fraction
from typing import Annotated, Any
from pydantic import (
    BaseModel, ConfigDict, PlainSerializer, PlainValidator, model_validator
)


def parse_rational(value: Any) -> Fraction:
    """Accept ints, Fractions and canonical 'p/q' strings"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("Booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"Zero denominator in '{value}'") from None
    raise ValueError(f"Cannot read {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Canonical 'p/q' with gcd(p, q) = 1 and q > 0"""
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class InvariantRecord(BaseModel):
    """Exact invariants (r, q, H^2, K) of one solution"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    m: int
    r: Rational
    q: int
    h2: Rational
    kappa: Rational

    @model_validator(mode='after')
    def validate_invariants(self):
        if self.r <= 0:
            raise ValueError("r must be positive")
        if self.kappa * self.r != 4:
            raise ValueError(f"kappa*r must equal 4, got {self.kappa * self.r}")
        if abs(self.q) > self.r:
            raise ValueError(f"|q|={abs(self.q)} exceeds r={self.r}")
        if self.h2 <= 0:
            raise ValueError("h2 must be positive")
        return self

    @classmethod
    def build(cls, n: int, m: int, r, q, h2) -> "InvariantRecord":
        r = Fraction(r)
        return cls(n=n, m=m, r=r, q=int(q), h2=Fraction(h2), kappa=Fraction(4) / r)
