"""The q = 0 fibre: chamber-vanishing products and toric points.

At ``q = 0`` the basis symbols multiply by

    E(nu) E(nu') = E(nu + nu')   if nu, nu' share a closed Weyl chamber,
                 = 0             otherwise.

The spectrum is a union of ``n!`` toric varieties, one per chamber, which
``W`` permutes simply transitively. The marked one, attached to the
antidominant chamber, has one coordinate ``x_k`` per simple root ``alpha_k``
together with the determinant ``u``. The coordinate ``x_k`` is the character
``(0, ..., 0, 1, ..., 1)`` with ``k`` zeros, i.e. ``w0(omega_{n-k})``, the
generator of the antidominant cone whose wall is ``alpha_k``. An
antidominant weight ``nu`` is then the monomial

    u^{nu_1} * prod_k x_k^{nu_{k+1} - nu_k}

and ``x_k`` vanishes on the stratum of ``L`` exactly when ``alpha_k`` is a
root of ``L``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bernstein import GenericElem
from .errors import CompositionMismatch, NotAntidominant, RankMismatch
from .units import UnitValue
from .weyl_lattice import (
    Composition,
    Perm,
    Weight,
    act,
    all_compositions,
    common_chamber,
    is_antidominant,
)


def _collect(pairs: Iterable[tuple[Weight, int]]) -> dict[Weight, int]:
    acc: dict[Weight, int] = defaultdict(int)
    for weight, c in pairs:
        acc[weight] += c
    return {w: c for w, c in acc.items() if c}


@dataclass(frozen=True)
class ZeroElem:
    """An integer combination of the ``E(nu)`` at ``q = 0``."""

    n: int
    terms: Mapping[Weight, int] = field(default_factory=dict)

    @classmethod
    def basis(cls, nu: Sequence[int], coeff: int = 1) -> ZeroElem:
        return cls(len(nu), _collect([(tuple(nu), coeff)]))

    @classmethod
    def one(cls, n: int) -> ZeroElem:
        return cls.basis((0,) * n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZeroElem):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: ZeroElem) -> ZeroElem:
        if self.n != other.n:
            raise RankMismatch(f"rank {self.n} against rank {other.n}")
        return ZeroElem(self.n, _collect([*self.terms.items(), *other.terms.items()]))

    def __repr__(self) -> str:
        if not self.terms:
            return "ZeroElem(0)"
        return "ZeroElem(" + " + ".join(f"{c}*E{w}" for w, c in sorted(self.terms.items())) + ")"


def multiply_zero(a: ZeroElem, b: ZeroElem) -> ZeroElem:
    if a.n != b.n:
        raise RankMismatch(f"rank {a.n} against rank {b.n}")
    pairs = (
        (tuple(x + y for x, y in zip(w1, w2)), c1 * c2)
        for w1, c1 in a.terms.items()
        for w2, c2 in b.terms.items()
        if common_chamber(w1, w2)
    )
    return ZeroElem(a.n, _collect(pairs))


def specialize_q0(a: GenericElem) -> ZeroElem:
    return ZeroElem(a.n, _collect((w, c.at_zero()) for w, c in a.terms.items()))


def in_chamber(w: Perm, nu: Sequence[int]) -> bool:
    """Whether ``nu`` lies in the closed chamber ``w`` (antidominant cone)."""
    return is_antidominant(act(w.inverse(), nu))


def project_chamber(w: Perm, a: ZeroElem) -> ZeroElem:
    """Restriction to the component of the chamber ``w``: drop outside terms."""
    return ZeroElem(a.n, {nu: c for nu, c in a.terms.items() if in_chamber(w, nu)})


# A toric coordinate is a unit or None, which stands for the value 0.
Coordinate = UnitValue | None


@dataclass(frozen=True)
class ToricPoint:
    """A point of the marked component with values in finite fields."""

    x: tuple[Coordinate, ...]
    u: UnitValue

    @property
    def n(self) -> int:
        return len(self.x) + 1

    def __mul__(self, other: ToricPoint) -> ToricPoint:
        x = tuple(None if a is None or b is None else a * b for a, b in zip(self.x, other.x))
        return ToricPoint(x, self.u * other.u)


def idempotents(n: int, q: int) -> list[ToricPoint]:
    """The ``2^(n-1)`` idempotents ``e_L``, one per composition of ``n``."""
    one = UnitValue.one(q)
    out = []
    for composition in all_compositions(n):
        roots = composition.simple_roots
        x = tuple(None if k in roots else one for k in range(1, n))
        out.append(ToricPoint(x, one))
    return out


def stratum_of_point(pt: ToricPoint) -> Composition:
    """The composition whose simple roots are the vanishing coordinates."""
    parts, size = [], 1
    for value in pt.x:
        if value is None:
            size += 1
        else:
            parts.append(size)
            size = 1
    parts.append(size)
    return Composition(tuple(parts))


def levi_orbit_point(composition: Composition, z: Sequence[UnitValue]) -> ToricPoint:
    """The point of the stratum of ``L`` with block determinants ``z``.

    ``x_k`` vanishes on simple roots of ``L``. At a block boundary ``k`` it is
    the product of the ``z_j`` over the blocks after position ``k``, which
    fill the last ``n - k`` coordinates. ``u`` is the product of all ``z_j``.
    """
    if len(z) != len(composition.parts):
        raise CompositionMismatch(
            f"{len(z)} units for a composition with {len(composition.parts)} blocks"
        )
    q = z[0].q
    n = composition.n
    tail = {}
    acc = UnitValue.one(q)
    for start, value in zip(reversed(composition.starts), reversed(z)):
        acc = acc * value
        tail[start] = acc
    x = tuple(None if k in composition.simple_roots else tail[k] for k in range(1, n))
    return ToricPoint(x, acc)


def monomial_value(nu: Sequence[int], pt: ToricPoint) -> Coordinate:
    """Value of the antidominant character ``e^nu`` at ``pt``, with ``0^0 = 1``."""
    if not is_antidominant(nu):
        raise NotAntidominant(f"{tuple(nu)} is not weakly increasing")
    n = len(nu)
    if n != pt.n:
        raise RankMismatch(f"weight of rank {n} at a point of rank {pt.n}")
    value = pt.u ** nu[0]
    for k in range(1, n):
        power = nu[k] - nu[k - 1]
        if power == 0:
            continue
        coordinate = pt.x[k - 1]
        if coordinate is None:
            return None
        value = value * coordinate**power
    return value
