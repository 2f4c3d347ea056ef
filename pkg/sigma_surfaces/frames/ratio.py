from fractions import Fraction
from typing import Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator

Number = Union[int, float, Fraction]

DEFAULT_P2 = (25, 110, 285, 428, 355, 150, 25)


def _horner(coefficients: Tuple[int, ...], y: Number) -> Number:
    value = 0
    for c in reversed(coefficients):
        value = value * y + c
    return value


class RatioPolynomial(BaseModel):
    """(H1/H2)^2 = P1(|x|^2)/P2(|x|^2) with P1(y) = y^6 P2(1/y).

    Coefficients are in ascending powers of y.
    """
    model_config = ConfigDict(frozen=True)

    coefficients: Tuple[int, ...] = DEFAULT_P2

    @field_validator('coefficients')
    @classmethod
    def validate_coefficients(cls, v):
        if len(v) != 7:
            raise ValueError(f"Expected a degree-6 polynomial (7 coefficients), got {len(v)}")
        if v[0] == 0 or v[-1] == 0:
            raise ValueError("Constant and leading coefficients must not vanish")
        return v

    @property
    def p2(self) -> Tuple[int, ...]:
        return self.coefficients

    @property
    def p1(self) -> Tuple[int, ...]:
        return tuple(reversed(self.coefficients))

    def eval_p1(self, y: Number) -> Number:
        return _horner(self.p1, y)

    def eval_p2(self, y: Number) -> Number:
        return _horner(self.p2, y)

    def ratio(self, y: Number) -> Number:
        """P1(y)/P2(y); exact when y is a Fraction or int"""
        if isinstance(y, (int, Fraction)):
            return Fraction(self.eval_p1(y), self.eval_p2(y))
        return self.eval_p1(y) / self.eval_p2(y)
