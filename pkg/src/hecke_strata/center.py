"""The augmented q = 0 algebra, its center, and evaluation on Satake strata.

Elements are integer combinations of symbols ``T_t E(nu)`` with ``t`` in the
finite torus ``T(F_q)`` and ``nu`` a weight. Products add torus parts
modulo ``q - 1`` and multiply weights by the chamber rule. ``W`` acts
diagonally, and the invariants have the orbit sums ``Z(t, x)`` as a
Z-basis, one for each orbit with ``x`` antidominant.

A point of the quotient is given by a composition ``L``, a ``W_L``-orbit
``t0`` in the dual finite torus, and block determinants ``z``. A central
element is evaluated by restricting it to the antidominant chamber and
reading each surviving term ``T_t E(x)`` as ``<t, t0> * x(v0)``. Here
``v0`` is the toric point of ``(L, z)`` and the pairing is
``zeta_{q-1}^{sum t_i t0_i}``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BasisExpansionFailure, CompositionMismatch, NotAntidominant
from .finite_field import field_tables
from .finite_torus import TorusElem, TorusOrbit, orbit_count, orbits
from .units import UnitValue
from .vinberg_zero import levi_orbit_point, monomial_value
from .weyl_lattice import (
    Composition,
    HeckeParams,
    Weight,
    all_compositions,
    common_chamber,
    is_antidominant,
)

Key = tuple[TorusElem, Weight]


def _collect(pairs: Iterable[tuple[Key, int]]) -> dict[Key, int]:
    acc: dict[Key, int] = defaultdict(int)
    for key, c in pairs:
        acc[key] += c
    return {k: c for k, c in acc.items() if c}


@dataclass(frozen=True)
class AugmentedElem:
    """Integer combination of ``T_t E(nu)``, keyed by ``(t, nu)``."""

    q: int
    terms: Mapping[Key, int] = field(default_factory=dict)

    @classmethod
    def one(cls, n: int, q: int) -> AugmentedElem:
        return cls(q, {((0,) * n, (0,) * n): 1})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AugmentedElem):
            return NotImplemented
        return self.q == other.q and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def __add__(self, other: AugmentedElem) -> AugmentedElem:
        return AugmentedElem(self.q, _collect([*self.terms.items(), *other.terms.items()]))

    def __mul__(self, other: AugmentedElem) -> AugmentedElem:
        m = self.q - 1
        pairs = (
            (
                (
                    tuple((a + b) % m for a, b in zip(t1, t2)),
                    tuple(a + b for a, b in zip(x1, x2)),
                ),
                c1 * c2,
            )
            for (t1, x1), c1 in self.terms.items()
            for (t2, x2), c2 in other.terms.items()
            if common_chamber(x1, x2)
        )
        return AugmentedElem(self.q, _collect(pairs))

    def scaled(self, c: int) -> AugmentedElem:
        return AugmentedElem(self.q, {k: c * v for k, v in self.terms.items() if c * v})


def diagonal_orbit(t: Sequence[int], x: Sequence[int]) -> set[Key]:
    """All distinct ``(sigma t, sigma x)`` for ``sigma`` in ``S_n``."""
    n = len(x)
    out = set()
    for sigma in permutations(range(n)):
        moved_t, moved_x = [0] * n, [0] * n
        for i, j in enumerate(sigma):
            moved_t[j], moved_x[j] = t[i], x[i]
        out.add((tuple(moved_t), tuple(moved_x)))
    return out


def orbit_key(t: Sequence[int], x: Sequence[int]) -> Key:
    """Canonical orbit representative.

    The weight is sorted increasingly, and the torus part is then sorted
    inside each run of equal weight coordinates, the least choice in the
    stabiliser.
    """
    order = sorted(range(len(x)), key=lambda i: (x[i], t[i]))
    return tuple(t[i] for i in order), tuple(x[i] for i in order)


@dataclass(frozen=True)
class CentralElem:
    """The orbit sum ``Z(t, x)`` together with its expansion."""

    key: Key
    expanded: AugmentedElem


def central_basis(t: Sequence[int], x: Sequence[int], q: int) -> CentralElem:
    if not is_antidominant(x):
        raise NotAntidominant(f"{tuple(x)} is not weakly increasing")
    t = tuple(a % (q - 1) for a in t)
    terms = {key: 1 for key in diagonal_orbit(t, x)}
    return CentralElem(orbit_key(t, x), AugmentedElem(q, terms))


def is_w_invariant(a: AugmentedElem) -> bool:
    return all(
        a.terms.get(other, 0) == c for (t, x), c in a.terms.items() for other in diagonal_orbit(t, x)
    )


def central_expansion(a: AugmentedElem) -> dict[Key, int]:
    """Coordinates of an invariant element in the orbit-sum basis."""
    out: dict[Key, int] = {}
    seen: set[Key] = set()
    for (t, x), c in a.terms.items():
        if (t, x) in seen:
            continue
        orbit = diagonal_orbit(t, x)
        seen |= orbit
        if any(a.terms.get(k, 0) != c for k in orbit):
            raise BasisExpansionFailure(f"coefficients vary on the orbit of {(t, x)}")
        out[orbit_key(t, x)] = c
    return out


def multiply_central(z1: CentralElem, z2: CentralElem) -> dict[Key, int]:
    """Product of two orbit sums, written in the orbit-sum basis."""
    return central_expansion(z1.expanded * z2.expanded)


def combination(coeffs: Mapping[Key, int], q: int) -> AugmentedElem:
    """Expand an integer combination of orbit sums."""
    total = AugmentedElem(q)
    for (t, x), c in coeffs.items():
        total = total + central_basis(t, x, q).expanded.scaled(c)
    return total


def restrict_to_marked_chamber(a: AugmentedElem) -> AugmentedElem:
    """Keep the terms whose weight is antidominant.

    On invariant elements this is the isomorphism from the invariants onto
    the functions on the marked component. It sends ``Z(t, x)`` to the sum
    of ``T_{t'} E(x)`` over the stabiliser orbit of ``t``.
    """
    return AugmentedElem(a.q, {k: c for k, c in a.terms.items() if is_antidominant(k[1])})


def central_keys(n: int, q: int, max_weight: int) -> list[Key]:
    """All orbit keys with ``|x|_inf <= max_weight``, sorted."""
    keys = set()
    for x in product(range(-max_weight, max_weight + 1), repeat=n):
        if not is_antidominant(x):
            continue
        for t in product(range(q - 1), repeat=n):
            keys.add(orbit_key(t, x))
    return sorted(keys)


@dataclass(frozen=True)
class StratumPoint:
    """A point of the stratum of ``L``: a ``W_L``-orbit and block determinants."""

    torus_orbit: TorusOrbit
    z: tuple[UnitValue, ...]

    def __post_init__(self):
        if len(self.z) != len(self.composition.parts):
            raise CompositionMismatch(
                f"{len(self.z)} units for {len(self.composition.parts)} blocks"
            )

    @property
    def composition(self) -> Composition:
        return self.torus_orbit.composition


def enumerate_strata(params: HeckeParams) -> list[tuple[Composition, int]]:
    return [(L, orbit_count(L, params.q)) for L in all_compositions(params.n)]


def enumerate_orbits(params: HeckeParams) -> Iterator[TorusOrbit]:
    for L in all_compositions(params.n):
        yield from orbits(L, params.q)


def evaluate(a: AugmentedElem, pt: StratumPoint, params: HeckeParams) -> UnitValue | None:
    """Value of the function ``a`` at ``pt``; None stands for zero.

    Only the antidominant terms contribute. Their values are grouped by
    weight, and each group is a sum in F_q times one monomial. When several
    nonzero groups remain, all monomials must lie in F_q so that the sum
    can be formed there.
    """
    q = params.q
    if a.q != q:
        raise ValueError(f"element over F_{a.q} evaluated with q = {q}")
    n = pt.composition.n
    t0 = pt.torus_orbit.rep
    v0 = levi_orbit_point(pt.composition, pt.z)
    tables = field_tables(params.p, params.f)
    by_weight: dict[Weight, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for (t, x), c in a.terms.items():
        if len(x) != n:
            raise CompositionMismatch(f"element of rank {len(x)} at a point of rank {n}")
        if is_antidominant(x):
            by_weight[x][sum(i * j for i, j in zip(t, t0)) % (q - 1)] += c
    groups = []
    for x, coeffs in by_weight.items():
        scalar = tables.sum_of_powers(coeffs)
        monomial = monomial_value(x, v0)
        if scalar is not None and monomial is not None:
            groups.append(UnitValue(q, 1, scalar) * monomial)
    if len(groups) <= 1:
        return groups[0] if groups else None
    if any(g.degree != 1 for g in groups):
        raise ValueError("sum of values outside F_q is not supported")
    exponent = tables.sum_of_powers(Counter(g.exponent for g in groups))
    return None if exponent is None else UnitValue(q, 1, exponent)


def evaluate_central(z: CentralElem, pt: StratumPoint, params: HeckeParams) -> UnitValue | None:
    return evaluate(z.expanded, pt, params)

