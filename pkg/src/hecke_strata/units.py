"""Nonzero elements of finite extensions of F_q, written multiplicatively.

A unit of ``F_{q^k}`` is recorded as an exponent ``e`` of a fixed generator
``zeta_{q^k - 1}``. The generators are assumed norm-coherent:

    zeta_{q^{km} - 1} ** ((q^{km} - 1) // (q^k - 1)) == zeta_{q^k - 1}

so a value of degree ``k`` embeds in degree ``km`` by scaling its exponent.
Every value is stored in the smallest degree that contains it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import divisors


def _scale(q: int, small: int, big: int) -> int:
    return (q**big - 1) // (q**small - 1)


@dataclass(frozen=True)
class UnitValue:
    """``zeta_{q^degree - 1} ** exponent`` in canonical (minimal degree) form."""

    q: int
    degree: int
    exponent: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        modulus = self.q**self.degree - 1
        e = self.exponent % modulus
        degree = self.degree
        for d in divisors(self.degree):
            step = _scale(self.q, d, self.degree)
            if e % step == 0:
                degree, e = d, e // step
                break
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def one(cls, q: int) -> UnitValue:
        return cls(q, 1, 0)

    @classmethod
    def root_of_unity(cls, q: int, order: int, power: int) -> UnitValue:
        """``zeta_order ** power`` for ``order`` prime to ``q``.

        ``zeta_order`` is ``zeta_{q^k - 1} ** ((q^k - 1) // order)`` for the
        least ``k`` with ``order | q^k - 1``; coherence makes the choice of
        ``k`` immaterial.
        """
        if order < 1 or math.gcd(order, q) != 1:
            raise ValueError(f"no root of unity of order {order} over F_{q}")
        k = 1
        while (q**k - 1) % order:
            k += 1
        return cls(q, k, power * ((q**k - 1) // order))

    def exponent_in(self, degree: int) -> int:
        """Exponent of the same value relative to ``zeta_{q^degree - 1}``."""
        if degree % self.degree:
            raise ValueError(f"F_{{q^{self.degree}}} is not inside F_{{q^{degree}}}")
        return self.exponent * _scale(self.q, self.degree, degree)

    def _common(self, other: UnitValue) -> int:
        if self.q != other.q:
            raise ValueError(f"units over F_{self.q} and F_{other.q}")
        return math.lcm(self.degree, other.degree)

    def __mul__(self, other: UnitValue) -> UnitValue:
        m = self._common(other)
        return UnitValue(self.q, m, self.exponent_in(m) + other.exponent_in(m))

    def __truediv__(self, other: UnitValue) -> UnitValue:
        return self * other.inverse()

    def __pow__(self, k: int) -> UnitValue:
        return UnitValue(self.q, self.degree, self.exponent * k)

    def inverse(self) -> UnitValue:
        return UnitValue(self.q, self.degree, -self.exponent)

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.exponent)

    def to_json(self) -> dict[str, int]:
        return {"degree": self.degree, "exponent": self.exponent}

    @classmethod
    def from_json(cls, q: int, data: dict) -> UnitValue:
        return cls(q, int(data["degree"]), int(data["exponent"]))

    def __repr__(self) -> str:
        return f"zeta_{{q^{self.degree}-1}}^{self.exponent}"


def unit_product(values, q: int) -> UnitValue:
    out = UnitValue.one(q)
    for v in values:
        out = out * v
    return out
