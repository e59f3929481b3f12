"""The symmetric group S_n acting on the rank-n lattice Z^n.

Conventions fixed here are inherited by every other module:

* a permutation ``w`` acts on weights on the left by
  ``act(w, nu)[j] = nu[w^{-1}(j)]``, so the entry at position ``i``
  moves to position ``w(i)``;
* a weight is *antidominant* when its coordinates are weakly increasing;
* ``rho = (n-1, ..., 1, 0)`` and ``w . nu = w(nu + rho) - rho``;
* the pairing with the half sum of positive coroots of the adjoint group is
  ``<mu, rho_ad> = sum_{k=1}^{n-1} (mu_1 + ... + mu_k)``.

Weights are plain tuples of ints. Permutations store 0-based images but
are built and printed with 1-based cycles, as in the mathematics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import accumulate, permutations, product
from typing import Iterable, Iterator, Sequence

from sympy import isprime

from .errors import BadParams, RankMismatch

Weight = tuple[int, ...]


@dataclass(frozen=True)
class HeckeParams:
    """Rank ``n`` and residue field size ``q = p**f``."""

    n: int
    p: int
    f: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise BadParams(f"rank must be positive, got n={self.n}")
        if self.f < 1:
            raise BadParams(f"f must be positive, got f={self.f}")
        if not isprime(self.p):
            raise BadParams(f"{self.p} is not a prime")

    @property
    def q(self) -> int:
        return self.p**self.f


@dataclass(frozen=True)
class Perm:
    """A permutation of ``{0, ..., n-1}`` stored by its images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Perm:
        """Build from 1-based cycles, e.g. ``Perm.from_cycles(3, (1, 2, 3))``."""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b - 1
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm) -> Perm:
        """Composition ``(self * other)(i) = self(other(i))``."""
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Perm:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        result = Perm.identity(self.n)
        for _ in range(abs(k)):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (0-based), each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __repr__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return f"Perm.identity({self.n})"
        text = "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in moved)
        return f"Perm[{self.n}]{text}"


def all_perms(n: int) -> Iterator[Perm]:
    for images in permutations(range(n)):
        yield Perm(images)


@dataclass(frozen=True)
class Composition:
    """An ordered composition ``(n_1, ..., n_r)`` of ``n``.

    It stands for the standard Levi subgroup ``GL_{n_1} x ... x GL_{n_r}``
    of block diagonal matrices.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(m < 1 for m in self.parts):
            raise ValueError(f"bad composition {self.parts}")

    @classmethod
    def parse(cls, text: str) -> Composition:
        return cls(tuple(int(x) for x in text.split(",")))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def starts(self) -> tuple[int, ...]:
        """0-based position of the first coordinate of each block."""
        return (0, *accumulate(self.parts))[:-1]

    def blocks(self) -> list[range]:
        return [range(s, s + m) for s, m in zip(self.starts, self.parts)]

    @cached_property
    def simple_roots(self) -> frozenset[int]:
        """The set ``I`` of 1-based simple root indices inside the Levi."""
        boundaries = set(accumulate(self.parts))
        return frozenset(k for k in range(1, self.n) if k not in boundaries)

    @property
    def period(self) -> int:
        """Least common multiple of the block sizes."""
        return reduce(math.lcm, self.parts, 1)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def all_compositions(n: int) -> list[Composition]:
    """All ``2^(n-1)`` compositions of ``n``, coarsest first."""
    out = []
    for cuts in product((False, True), repeat=n - 1):
        parts, size = [], 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        out.append(Composition(tuple(parts)))
    return out


def _check_rank(*weights: Sequence[int]) -> int:
    ranks = {len(w) for w in weights}
    if len(ranks) != 1:
        raise RankMismatch(f"weights of different ranks: {sorted(ranks)}")
    return ranks.pop()


def act(w: Perm, nu: Sequence[int]) -> Weight:
    """Left action ``act(w, nu)[j] = nu[w^{-1}(j)]``."""
    _check_rank(w.images, nu)
    out = [0] * len(nu)
    for i, value in enumerate(nu):
        out[w.images[i]] = value
    return tuple(out)


def antidominant(nu: Sequence[int]) -> tuple[Weight, Perm]:
    """Weakly increasing rearrangement of ``nu`` and a witness ``w``.

    The witness comes from a stable sort, so equal coordinates keep their
    relative order and ``w`` is the shortest permutation with
    ``act(w, nu) == nu_minus``.
    """
    order = sorted(range(len(nu)), key=lambda i: nu[i])
    images = [0] * len(nu)
    for k, i in enumerate(order):
        images[i] = k
    return tuple(nu[i] for i in order), Perm(tuple(images))


def is_antidominant(nu: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(nu, nu[1:]))


def is_dominant(nu: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(nu, nu[1:]))


def rho(n: int) -> Weight:
    return tuple(range(n - 1, -1, -1))


def rho_ad_pairing(mu: Sequence[int]) -> int:
    """``<mu, rho_ad>`` as the sum of the first ``n-1`` partial sums."""
    return sum(list(accumulate(mu))[:-1])


def length(nu: Sequence[int]) -> int:
    """Length of the translation by ``nu``: ``sum_{i<j} |nu_i - nu_j|``."""
    return sum(abs(a - b) for k, a in enumerate(nu) for b in nu[k + 1:])


def q_exponent(nu: Sequence[int], nu2: Sequence[int]) -> int:
    """Half the length defect ``l(nu) + l(nu2) - l(nu + nu2)``."""
    _check_rank(nu, nu2)
    total = tuple(a + b for a, b in zip(nu, nu2))
    defect = length(nu) + length(nu2) - length(total)
    assert defect % 2 == 0 and defect >= 0
    return defect // 2


def q_exponent_via_pairing(nu: Sequence[int], nu2: Sequence[int]) -> int:
    """The same exponent written with ``<x - x_minus, rho_ad>`` terms."""
    _check_rank(nu, nu2)

    def height(x):
        return rho_ad_pairing(x) - rho_ad_pairing(antidominant(x)[0])

    total = tuple(a + b for a, b in zip(nu, nu2))
    return height(nu) + height(nu2) - height(total)


def common_chamber(nu: Sequence[int], nu2: Sequence[int]) -> bool:
    """Whether one permutation sorts both weights into weakly increasing order."""
    _check_rank(nu, nu2)
    order = sorted(range(len(nu)), key=lambda i: (nu[i], nu2[i]))
    return all(nu2[i] <= nu2[j] for i, j in zip(order, order[1:]))


def coxeter_element(composition: Composition) -> Perm:
    """Product of the cycles ``(s+1, s+2, ..., s+m)`` over the blocks."""
    images = list(range(composition.n))
    for block in composition.blocks():
        for i in block:
            images[i] = i + 1 if i + 1 in block else block.start
    return Perm(tuple(images))


def dot_act(w: Perm, nu: Sequence[int]) -> Weight:
    """Dot action ``w(nu + rho) - rho``."""
    r = rho(len(nu))
    moved = act(w, [a + b for a, b in zip(nu, r)])
    return tuple(a - b for a, b in zip(moved, r))


def levi_weyl_group(composition: Composition) -> Iterator[Perm]:
    """Elements of ``W_L``: independent permutations inside each block."""
    blocks = composition.blocks()
    for choice in product(*(permutations(b) for b in blocks)):
        images = [0] * composition.n
        for block, perm in zip(blocks, choice):
            for i, j in zip(block, perm):
                images[i] = j
        yield Perm(tuple(images))


def block_permutations(composition: Composition) -> list[Perm]:
    """Elements of ``W(L)``.

    These permute whole blocks of equal size and keep the order of
    coordinates inside each block. They normalise ``W_L`` and commute with
    the Coxeter element of ``L``.
    """
    blocks = composition.blocks()
    by_size: dict[int, list[int]] = {}
    for index, m in enumerate(composition.parts):
        by_size.setdefault(m, []).append(index)
    groups = list(by_size.values())
    out = []
    for choice in product(*(permutations(g) for g in groups)):
        target = list(range(len(blocks)))
        for group, arrangement in zip(groups, choice):
            for src, dst in zip(group, arrangement):
                target[src] = dst
        images = [0] * composition.n
        for src, dst in enumerate(target):
            for i, j in zip(blocks[src], blocks[dst]):
                images[i] = j
        out.append(Perm(tuple(images)))
    return out


def block_target(w: Perm, composition: Composition) -> list[int]:
    """For ``w`` in ``W(L)``, the block index that each block is sent to."""
    starts = composition.starts
    return [starts.index(w(s)) for s in starts]


def weights_in_box(n: int, low: int, high: int) -> Iterable[Weight]:
    return product(range(low, high + 1), repeat=n)
