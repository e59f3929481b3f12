"""Jantzen exponents, tame inertial types and tame Galois representations.

Everything here is exponent arithmetic. A character of tame inertia
through ``F_{q^t}^x`` is a residue mod ``q^t - 1``. A tame semisimple
representation is a list of blocks ``(m, y, z)``. On such a block inertia
acts through ``y, qy, ..., q^{m-1} y`` mod ``q^m - 1``, and Frobenius acts
by a companion matrix of determinant ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import divisors

from .center import StratumPoint
from .errors import CompositionMismatch, NotGeneric, OrderMismatch
from .finite_torus import is_generic
from .units import UnitValue, unit_product
from .weyl_lattice import Composition, Perm, act, coxeter_element, rho

Residues = tuple[int, ...]


def jantzen_s(w: Perm, mu: Sequence[int], t: int, q: int) -> Residues:
    """``a_j = sum_{i<t} q^i (w^{-i} mu)_j`` mod ``q^t - 1``.

    This is the norm of ``mu`` along ``F_q o w^{-1}`` evaluated at
    ``zeta_{q^t - 1}``. It satisfies ``q a = w(a)``.
    """
    if not (w**t).is_identity():
        raise OrderMismatch(f"{w} does not have order dividing {t}")
    modulus = q**t - 1
    out = []
    for j in range(len(mu)):
        total, k = 0, j
        for i in range(t):
            total += q**i * mu[k]
            k = w(k)
        out.append(total % modulus)
    return tuple(out)


def _proper_divisors(m: int) -> list[int]:
    return [d for d in divisors(m) if d < m]


def is_good(w: Perm, mu: Sequence[int], q: int) -> bool:
    """Cycle sums ``sum_k mu_{w^k(i)} q^k`` avoid every proper subfield."""
    for cycle in w.cycles():
        m = len(cycle)
        moduli = [(q**m - 1) // (q**d - 1) for d in _proper_divisors(m)]
        for r in range(m):
            rotated = cycle[r:] + cycle[:r]
            total = sum(mu[i] * q**k for k, i in enumerate(rotated))
            if any(total % modulus == 0 for modulus in moduli):
                return False
    return True


def q_orbit_min(y: int, m: int, q: int) -> int:
    modulus = q**m - 1
    return min(y * q**j % modulus for j in range(m))


@dataclass(frozen=True)
class TameType:
    """A ``W_L``-orbit of residues mod ``q^t - 1`` that Frobenius preserves.

    ``a`` is sorted increasingly inside every block. ``frobenius_witness``
    is the lexicographically least element of ``W_L`` with
    ``q a = act(witness, a)``.
    """

    composition: Composition
    q: int
    a: Residues
    frobenius_witness: Perm

    @property
    def period(self) -> int:
        return self.composition.period


def _frobenius_witness(a: Residues, composition: Composition, q: int, t: int) -> Perm:
    modulus = q**t - 1
    images = [0] * len(a)
    for block in composition.blocks():
        free = list(block)
        for i in block:
            # act(w, a)_j = a_{w^{-1} j}, so q a = act(w, a) needs a_i = q a_{w(i)}
            j = next((j for j in free if q * a[j] % modulus == a[i]), None)
            if j is None:
                raise ValueError(f"{a} is not Frobenius stable on block {block}")
            free.remove(j)
            images[i] = j
    return Perm(tuple(images))


def make_tame_type(composition: Composition, a: Sequence[int], q: int) -> TameType:
    t = composition.period
    modulus = q**t - 1
    canonical: list[int] = []
    for block in composition.blocks():
        canonical.extend(sorted(a[i] % modulus for i in block))
    canonical_t = tuple(canonical)
    return TameType(composition, q, canonical_t, _frobenius_witness(canonical_t, composition, q, t))


def tau_L(mu: Sequence[int], composition: Composition, q: int) -> TameType:
    """The type of ``(cox_L, mu + rho)`` as a ``W_L``-orbit."""
    shifted = [a + b for a, b in zip(mu, rho(len(mu)))]
    a = jantzen_s(coxeter_element(composition), shifted, composition.period, q)
    return make_tame_type(composition, a, q)


def act_on_type(w: Perm, tame: TameType) -> TameType:
    return make_tame_type(tame.composition, act(w, tame.a), tame.q)


def is_regular(tame: TameType) -> bool:
    """Entries inside each block are pairwise distinct."""
    return all(
        len({tame.a[i] for i in block}) == len(block) for block in tame.composition.blocks()
    )


@dataclass(frozen=True)
class RepBlock:
    size: int
    inertia: int
    frobdet: UnitValue

    def normal_form(self, q: int) -> tuple[int, int, tuple[int, int]]:
        return (self.size, q_orbit_min(self.inertia, self.size, q), self.frobdet.sort_key())


@dataclass(frozen=True)
class GaloisRep:
    """A tame semisimple representation as blocks in construction order."""

    q: int
    blocks: tuple[RepBlock, ...]

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    def normal_form(self) -> tuple:
        return tuple(sorted(b.normal_form(self.q) for b in self.blocks))

    def to_json(self) -> dict:
        return {
            "blocks": [
                {"size": b.size, "inertia": b.inertia, "frobdet": b.frobdet.to_json()}
                for b in self.blocks
            ]
        }

    @classmethod
    def from_json(cls, q: int, data: dict) -> GaloisRep:
        return cls(
            q,
            tuple(
                RepBlock(int(b["size"]), int(b["inertia"]), UnitValue.from_json(q, b["frobdet"]))
                for b in data["blocks"]
            ),
        )


def rep_isomorphic(r1: GaloisRep, r2: GaloisRep) -> bool:
    return r1.q == r2.q and r1.normal_form() == r2.normal_form()


def build_rep(
    composition: Composition, mu: Sequence[int], z: Sequence[UnitValue], q: int
) -> GaloisRep:
    """The representation attached to ``(cox_L, mu + rho)`` with Frobenius data ``z``.

    Each block takes the first coordinate of its part of the Jantzen
    exponent. That value lies in ``F_{q^m}`` for a block of size ``m``, so it
    is reduced mod ``q^m - 1``.
    """
    if len(z) != len(composition.parts) or len(mu) != composition.n:
        raise CompositionMismatch(f"{len(z)} units and rank {len(mu)} for {composition}")
    t = composition.period
    shifted = [a + b for a, b in zip(mu, rho(len(mu)))]
    a = jantzen_s(coxeter_element(composition), shifted, t, q)
    blocks = []
    for start, m, unit in zip(composition.starts, composition.parts, z):
        step = (q**t - 1) // (q**m - 1)
        assert a[start] % step == 0
        blocks.append(RepBlock(m, a[start] // step, unit))
    return GaloisRep(q, tuple(blocks))


def f_extract(r: GaloisRep) -> tuple[TameType, tuple[UnitValue, ...]]:
    """Inertial type (lifted to the common period) and Frobenius determinants."""
    composition = Composition(tuple(b.size for b in r.blocks))
    t = composition.period
    a: list[int] = []
    for b in r.blocks:
        modulus = r.q**b.size - 1
        step = (r.q**t - 1) // modulus
        a.extend((b.inertia * r.q**j % modulus) * step for j in range(b.size))
    return make_tame_type(composition, a, r.q), tuple(b.frobdet for b in r.blocks)


def parametrize_stratum(pt: StratumPoint, q: int, *, check_generic: bool = True) -> GaloisRep:
    """The representation attached to a point of a generic stratum component."""
    mu = pt.torus_orbit.rep
    if check_generic and not is_generic(mu, pt.composition, q):
        raise NotGeneric(f"orbit {mu} of {pt.composition} is not generic")
    return build_rep(pt.composition, mu, pt.z, q)


def det_laws(r: GaloisRep) -> tuple[UnitValue, UnitValue]:
    """``(det of inertia generator, det of Frobenius)``.

    A block ``(m, y)`` has inertia determinant ``y (1 + q + ... + q^{m-1})``
    mod ``q^m - 1``, which is ``zeta_{q-1}^y``.
    """
    inertia = sum(b.inertia for b in r.blocks) % (r.q - 1)
    return UnitValue(r.q, 1, inertia), unit_product((b.frobdet for b in r.blocks), r.q)


def block_permute_units(w: Perm, composition: Composition, z: Sequence[UnitValue]) -> tuple:
    """Move ``z_j`` to the block that ``w`` sends block ``j`` to."""
    starts = composition.starts
    out = list(z)
    for j, s in enumerate(starts):
        out[starts.index(w(s))] = z[j]
    return tuple(out)

