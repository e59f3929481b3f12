"""The finite torus T(F_q) as exponent vectors modulo q - 1.

A point ``t`` is the tuple of exponents of ``zeta_{q-1}`` in its diagonal
entries. For a composition ``L`` the orbits of ``W_L`` on ``T(F_q)`` are
represented by the box

    {a : 0 <= a_i <= q - 2, and a_{i+1} <= a_i for every simple root i of L}

so each orbit's canonical representative is blockwise weakly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, prod
from typing import Iterator, Sequence

from .errors import NotARepresentative
from .weyl_lattice import (
    Composition,
    Perm,
    Weight,
    act,
    block_permutations,
    dot_act,
    rho,
)

TorusElem = tuple[int, ...]


def ev_weight(mu: Sequence[int], q: int) -> TorusElem:
    """``mu(zeta_{q-1})``: reduce every coordinate mod ``q - 1``."""
    return tuple(a % (q - 1) for a in mu)


def _blockwise_decreasing(a: Sequence[int], composition: Composition) -> tuple[int, ...]:
    out: list[int] = []
    for block in composition.blocks():
        out.extend(sorted((a[i] for i in block), reverse=True))
    return tuple(out)


def in_rep_system(mu: Sequence[int], composition: Composition, q: int) -> bool:
    if len(mu) != composition.n or any(not 0 <= a <= q - 2 for a in mu):
        return False
    return all(mu[i] <= mu[i - 1] for i in composition.simple_roots)


def rep_system(composition: Composition, q: int) -> list[Weight]:
    """The canonical representatives of ``T(F_q) / W_L`` in lexicographic order."""
    per_block = []
    for m in composition.parts:
        per_block.append(
            [a for a in product(range(q - 1), repeat=m) if all(x >= y for x, y in zip(a, a[1:]))]
        )
    return sorted(sum(choice, ()) for choice in product(*per_block))


def orbit_count(composition: Composition, q: int) -> int:
    """Number of ``W_L``-orbits: multisets of size ``n_i`` from ``q - 1`` symbols."""
    return prod(comb(q - 2 + m, m) for m in composition.parts)


@dataclass(frozen=True)
class TorusOrbit:
    """A ``W_L``-orbit in ``T(F_q)``, keyed by its box representative."""

    composition: Composition
    rep: TorusElem

    @classmethod
    def of(cls, composition: Composition, t: Sequence[int], q: int) -> TorusOrbit:
        if len(t) != composition.n:
            raise NotARepresentative(f"{tuple(t)} has rank {len(t)}, expected {composition.n}")
        return cls(composition, _blockwise_decreasing(ev_weight(t, q), composition))


def orbits(composition: Composition, q: int) -> Iterator[TorusOrbit]:
    for mu in rep_system(composition, q):
        yield TorusOrbit(composition, mu)


def torus_dot(w: Perm, t: Sequence[int], q: int) -> TorusElem:
    """``w(t rho(zeta)) rho(zeta)^{-1}`` on exponents."""
    r = rho(len(t))
    moved = act(w, [a + b for a, b in zip(t, r)])
    return tuple((a - b) % (q - 1) for a, b in zip(moved, r))


def _require_rep(mu: Sequence[int], composition: Composition, q: int) -> None:
    if not in_rep_system(mu, composition, q):
        raise NotARepresentative(f"{tuple(mu)} is not in the box system of {composition}")


def is_generic(mu: Sequence[int], composition: Composition, q: int) -> bool:
    """Whether the whole ``W(L)`` dot orbit of ``mu`` stays in the box system."""
    _require_rep(mu, composition, q)
    return all(
        in_rep_system(dot_act(w, mu), composition, q) for w in block_permutations(composition)
    )


def is_n_deep(mu: Sequence[int], composition: Composition, q: int) -> bool:
    """Every coordinate lies in ``[n-1, q-2-(n-1)]``.

    The bound is imposed on all coordinates, not only those indexed by the
    simple roots of ``L``. Without it a torus stratum (no simple roots)
    would make every weight deep, and ``mu = (0, 0)`` for ``L = (1, 1)`` is
    deep but not generic.
    """
    _require_rep(mu, composition, q)
    n = composition.n
    return all(n - 1 <= a <= q - 2 - (n - 1) for a in mu)


def deep_bound(composition: Composition, q: int) -> tuple[int, int]:
    """``((q - 1 - 2(n-1)) / (q - 1))^{|I|}`` as a (numerator, denominator) pair."""
    n, k = composition.n, len(composition.simple_roots)
    return max(q - 1 - 2 * (n - 1), 0) ** k, (q - 1) ** k
