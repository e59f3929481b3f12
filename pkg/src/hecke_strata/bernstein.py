"""The commutative Bernstein algebra over Z[q] and its torus realisation.

The algebra has a Z[q]-basis ``E(nu)`` indexed by weights, with product

    E(nu) E(nu') = q^{q_exponent(nu, nu')} E(nu + nu').

``embed_bernstein`` sends ``E(nu)`` to ``e^nu q^{<nu - nu_minus, rho_ad>}``
inside the group ring of the lattice with Laurent coefficients in ``q``, and
``w_bullet`` is the twisted Weyl action on that ring whose invariants are
spanned by the ``sym_basis`` elements.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import NotDominant, RankMismatch
from .weyl_lattice import (
    Perm,
    Weight,
    act,
    antidominant,
    is_dominant,
    q_exponent,
    rho_ad_pairing,
)


@dataclass(frozen=True)
class Laurent:
    """A Laurent polynomial in ``q`` with integer coefficients.

    Stored sparsely as ``((degree, coefficient), ...)`` sorted by degree with
    no zero coefficients, so equality and hashing are structural. Plain
    polynomials are the ones with ``min_degree() >= 0``.
    """

    items: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> Laurent:
        return cls(tuple(sorted((d, c) for d, c in coeffs.items() if c)))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Laurent:
        return cls(((degree, coeff),) if coeff else ())

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def __add__(self, other: Laurent) -> Laurent:
        acc = defaultdict(int, self.items)
        for d, c in other.items:
            acc[d] += c
        return Laurent.from_dict(acc)

    def __neg__(self) -> Laurent:
        return Laurent(tuple((d, -c) for d, c in self.items))

    def __sub__(self, other: Laurent) -> Laurent:
        return self + (-other)

    def __mul__(self, other: Laurent) -> Laurent:
        acc: dict[int, int] = defaultdict(int)
        for d1, c1 in self.items:
            for d2, c2 in other.items:
                acc[d1 + d2] += c1 * c2
        return Laurent.from_dict(acc)

    def shift(self, k: int) -> Laurent:
        """Multiply by ``q^k``."""
        return Laurent(tuple((d + k, c) for d, c in self.items))

    def min_degree(self) -> int | None:
        return self.items[0][0] if self.items else None

    def at_zero(self) -> int:
        """Value at ``q = 0``; only defined for polynomials."""
        low = self.min_degree()
        if low is not None and low < 0:
            raise ValueError("negative powers of q have no value at q = 0")
        return dict(self.items).get(0, 0)

    def __repr__(self) -> str:
        if not self.items:
            return "0"
        return " + ".join(f"{c}*q^{d}" for d, c in self.items)


ONE = Laurent.monomial(0)


def _collect(pairs: Iterable[tuple[Weight, Laurent]]) -> dict[Weight, Laurent]:
    acc: dict[Weight, Laurent] = {}
    for weight, coeff in pairs:
        acc[weight] = acc.get(weight, Laurent()) + coeff
    return {w: c for w, c in acc.items() if c}


@dataclass(frozen=True)
class _SparseElem:
    n: int
    terms: Mapping[Weight, Laurent] = field(default_factory=dict)

    def __post_init__(self):
        for weight in self.terms:
            if len(weight) != self.n:
                raise RankMismatch(f"weight {weight} in rank {self.n}")

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _same_rank(self, other):
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} against rank {other.n}")

    def __add__(self, other):
        self._same_rank(other)
        return type(self)(self.n, _collect([*self.terms.items(), *other.terms.items()]))

    def __repr__(self) -> str:
        if not self.terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"({c})*{w}" for w, c in sorted(self.terms.items()))
        return f"{type(self).__name__}({body})"


class GenericElem(_SparseElem):
    """A Z[q]-combination of basis symbols ``E(nu)``."""

    @classmethod
    def basis(cls, nu: Sequence[int], coeff: Laurent = ONE) -> GenericElem:
        return cls(len(nu), _collect([(tuple(nu), coeff)]))

    @classmethod
    def one(cls, n: int) -> GenericElem:
        return cls.basis((0,) * n)


class TorusLaurentElem(_SparseElem):
    """An element of the group ring of the lattice over Z[q, q^-1]."""

    def __mul__(self, other: TorusLaurentElem) -> TorusLaurentElem:
        self._same_rank(other)
        pairs = (
            (tuple(a + b for a, b in zip(w1, w2)), c1 * c2)
            for w1, c1 in self.terms.items()
            for w2, c2 in other.terms.items()
        )
        return TorusLaurentElem(self.n, _collect(pairs))


def multiply_generic(a: GenericElem, b: GenericElem) -> GenericElem:
    """Product in the Bernstein algebra, bilinear in the ``E(nu)``."""
    a._same_rank(b)
    pairs = (
        (tuple(x + y for x, y in zip(w1, w2)), (c1 * c2).shift(q_exponent(w1, w2)))
        for w1, c1 in a.terms.items()
        for w2, c2 in b.terms.items()
    )
    return GenericElem(a.n, _collect(pairs))


def bernstein_height(nu: Sequence[int]) -> int:
    """``<nu - nu_minus, rho_ad>``, the q-power attached to ``e^nu``."""
    return rho_ad_pairing(nu) - rho_ad_pairing(antidominant(nu)[0])


def embed_bernstein(a: GenericElem) -> TorusLaurentElem:
    """``E(nu) -> e^nu q^{<nu - nu_minus, rho_ad>}``, extended linearly."""
    pairs = ((w, c.shift(bernstein_height(w))) for w, c in a.terms.items())
    return TorusLaurentElem(a.n, _collect(pairs))


def w_bullet(w: Perm, x: TorusLaurentElem) -> TorusLaurentElem:
    """``w . e^nu q^i = e^{w nu} q^{i + <w nu - nu, rho_ad>}`` termwise."""
    pairs = []
    for nu, coeff in x.terms.items():
        moved = act(w, nu)
        pairs.append((moved, coeff.shift(rho_ad_pairing(moved) - rho_ad_pairing(nu))))
    return TorusLaurentElem(x.n, _collect(pairs))


def sym_basis(lam: Sequence[int]) -> TorusLaurentElem:
    """``sum_{mu in W lam} q^{<mu - w0 lam, rho_ad>} e^mu`` over the orbit as a set."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not weakly decreasing")
    lowest = rho_ad_pairing(lam[::-1])
    orbit = set(permutations(lam))
    pairs = ((mu, Laurent.monomial(rho_ad_pairing(mu) - lowest)) for mu in orbit)
    return TorusLaurentElem(len(lam), _collect(pairs))
