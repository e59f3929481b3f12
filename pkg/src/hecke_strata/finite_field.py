"""Additive arithmetic in F_q through log/antilog tables.

Multiplicative data elsewhere is kept as exponents of ``zeta_{q-1}``. Sums
of such powers (needed when a central element is evaluated) are formed
here in a concrete model of F_q. Elements of ``F_{p^f}`` are encoded as
integers whose base-``p`` digits are polynomial coefficients modulo a
fixed primitive polynomial. ``zeta_{q-1}`` is identified with the class
of ``x``. For ``f = 1`` it is the least primitive root mod ``p``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Mapping

from sympy import isprime, primitive_root


def _digits(value: int, p: int, f: int) -> list[int]:
    out = []
    for _ in range(f):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def _powers_of_x(p: int, f: int, low: tuple[int, ...]) -> list[int] | None:
    """Powers of ``x`` modulo ``x^f + low(x)``; None unless ``x`` is primitive."""
    q = p**f
    one = [1] + [0] * (f - 1)
    current = one
    seen = []
    for _ in range(q - 1):
        seen.append(_undigits(current, p))
        top = current[-1]
        current = [0] + current[:-1]
        current = [(c - top * l) % p for c, l in zip(current, low)]
    if current != one or 0 in seen or len(set(seen)) != q - 1:
        return None
    return seen


class FieldTables:
    """Log and antilog tables of ``F_{p^f}`` for the generator ``zeta_{q-1}``."""

    def __init__(self, p: int, f: int):
        if not isprime(p):
            raise ValueError(f"{p} is not a prime")
        self.p, self.f, self.q = p, f, p**f
        if f == 1:
            g = primitive_root(p)
            self.antilog = [pow(g, k, p) for k in range(p - 1)]
        else:
            for low in product(range(p), repeat=f):
                powers = _powers_of_x(p, f, low)
                if powers is not None:
                    self.antilog = powers
                    break
        self.log = {value: k for k, value in enumerate(self.antilog)}

    def add(self, a: int, b: int) -> int:
        p, f = self.p, self.f
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, f), _digits(b, p, f))], p)

    def scale(self, c: int, a: int) -> int:
        p, f = self.p, self.f
        return _undigits([(c * x) % p for x in _digits(a, p, f)], p)

    def sum_of_powers(self, coeffs: Mapping[int, int]) -> int | None:
        """Exponent of ``sum c * zeta^e`` over ``{e: c}``, or None when it is zero."""
        total = 0
        for e, c in coeffs.items():
            total = self.add(total, self.scale(c, self.antilog[e % (self.q - 1)]))
        return self.log.get(total)


@lru_cache(maxsize=None)
def field_tables(p: int, f: int) -> FieldTables:
    return FieldTables(p, f)
