"""Closed-form classification for GL_2 and a cross-check against the general code.

For odd ``q`` the ``W``-orbits of ``T(F_q)`` are written ``t_i * (zeta^s, zeta^s)``:

* even case: weight ``(i + s, s - i)`` for ``0 <= i <= (q-1)/2``;
* odd case: weight ``(i - 1 + s, s - i)`` for ``1 <= i <= (q-1)/2``;

with ``0 <= s < q - 1``. Adding ``rho = (1, 0)`` gives
``h eta_1 + (s - i)(eta_1 + eta_2)`` with ``h = 2i + 1`` (even) or
``h = 2i`` (odd). Hence on the closed stratum the representation is
``ind(omega_{2f}^h) (x) omega_f^{s-i}``, of inertia exponent
``h + (s - i)(q + 1)`` mod ``q^2 - 1``. On the torus stratum it is the sum
of ``omega_f^{h + s - i}`` and ``omega_f^{s - i}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .center import StratumPoint
from .errors import BadParams
from .finite_torus import TorusOrbit, orbits, torus_dot
from .galois import GaloisRep, RepBlock, parametrize_stratum, q_orbit_min, rep_isomorphic
from .units import UnitValue
from .weyl_lattice import Composition, HeckeParams, Perm

CLOSED = Composition((2,))
TORUS = Composition((1, 1))
SWAP = Perm((1, 0))


@dataclass(frozen=True)
class GL2Case:
    parity: str
    i: int
    s: int
    units: tuple[UnitValue, ...]
    q: int

    def __post_init__(self):
        if self.q % 2 == 0:
            raise BadParams(f"the GL_2 case split needs odd q, got {self.q}")
        low = 0 if self.parity == "even" else 1
        if self.parity not in ("even", "odd") or not low <= self.i <= (self.q - 1) // 2:
            raise ValueError(f"bad case {self.parity}, i={self.i}")
        if len(self.units) not in (1, 2):
            raise ValueError("one unit for the closed stratum, two for the torus stratum")

    @property
    def composition(self) -> Composition:
        return CLOSED if len(self.units) == 1 else TORUS

    @property
    def weight(self) -> tuple[int, int]:
        if self.parity == "even":
            return (self.i + self.s, self.s - self.i)
        return (self.i - 1 + self.s, self.s - self.i)

    @property
    def head(self) -> int:
        return 2 * self.i + 1 if self.parity == "even" else 2 * self.i


def gl2_explicit(case: GL2Case) -> GaloisRep:
    q, twist = case.q, case.s - case.i
    if case.composition == CLOSED:
        inertia = (case.head + twist * (q + 1)) % (q * q - 1)
        return GaloisRep(q, (RepBlock(2, inertia, case.units[0]),))
    z1, z2 = case.units
    return GaloisRep(
        q,
        (RepBlock(1, (case.head + twist) % (q - 1), z1), RepBlock(1, twist % (q - 1), z2)),
    )


def negated_twist_inertia(case: GL2Case) -> int:
    """Closed-stratum exponent with the twist ``-(i + s)`` instead of ``s - i``.

    Kept as a diagnostic. It agrees with the general parametrisation when
    ``2s = 0`` mod ``q - 1`` and disagrees for most other ``s``.
    """
    q = case.q
    return (case.head - (case.i + case.s) * (q + 1)) % (q * q - 1)


def gl2_labels(q: int) -> Iterator[tuple[str, int, int]]:
    for s in range(q - 1):
        for i in range((q - 1) // 2 + 1):
            yield "even", i, s
        for i in range(1, (q - 1) // 2 + 1):
            yield "odd", i, s


def s_of(r: int) -> int:
    return -r // 2 if r % 2 == 0 else -(r + 1) // 2


def representative_identity_holds(q: int, r: int) -> bool:
    """``(r+1) + (q+1) s(r)`` and ``q((q-r) + (q+1)(s(r-2) + r - 1))`` share a q-orbit."""
    m = q * q - 1
    first = (r + 1 + (q + 1) * s_of(r)) % m
    second = q * ((q - r) + (q + 1) * (s_of(r - 2) + r - 1)) % m
    return q_orbit_min(first, 2, q) == q_orbit_min(second, 2, q)


def random_unit(rng: random.Random, q: int) -> UnitValue:
    degree = rng.choice((1, 2))
    return UnitValue(q, degree, rng.randrange(q**degree - 1))


@dataclass
class CrosscheckReport:
    q: int
    comparisons: int = 0
    orbits_checked: dict[str, int] = field(default_factory=dict)
    uncovered_orbits: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    identity_failures: list[int] = field(default_factory=list)
    invariance_failures: list = field(default_factory=list)
    negated_twist_disagreements: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.mismatches
            or self.uncovered_orbits
            or self.identity_failures
            or self.invariance_failures
        )

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "ok": self.ok,
            "comparisons": self.comparisons,
            "orbits_checked": self.orbits_checked,
            "uncovered_orbits": self.uncovered_orbits,
            "mismatches": self.mismatches,
            "identity_failures": self.identity_failures,
            "invariance_failures": self.invariance_failures,
            "negated_twist_disagreements": self.negated_twist_disagreements,
        }


def gl2_crosscheck(params: HeckeParams, samples: int = 10, seed: int = 0) -> CrosscheckReport:
    """Compare the closed forms with the general parametrisation on every orbit."""
    q = params.q
    if params.n != 2 or q % 2 == 0:
        raise BadParams(f"the GL_2 cross-check needs n = 2 and odd q, got n={params.n}, q={q}")
    rng = random.Random(seed)
    report = CrosscheckReport(q)

    for composition in (CLOSED, TORUS):
        by_orbit: dict[TorusOrbit, list[tuple[str, int, int]]] = {}
        for label in gl2_labels(q):
            parity, i, s = label
            dummy = GL2Case(parity, i, s, (UnitValue.one(q),) * len(composition.parts), q)
            by_orbit.setdefault(TorusOrbit.of(composition, dummy.weight, q), []).append(label)
        every = set(orbits(composition, q))
        report.uncovered_orbits += [list(o.rep) for o in every - by_orbit.keys()]
        report.orbits_checked[str(composition)] = len(by_orbit)
        for orbit, labels in sorted(by_orbit.items(), key=lambda kv: kv[0].rep):
            for _ in range(samples):
                units = tuple(random_unit(rng, q) for _ in composition.parts)
                general = parametrize_stratum(StratumPoint(orbit, units), q, check_generic=False)
                for parity, i, s in labels:
                    case = GL2Case(parity, i, s, units, q)
                    report.comparisons += 1
                    if not rep_isomorphic(general, gl2_explicit(case)):
                        report.mismatches.append(
                            {"case": [parity, i, s], "orbit": list(orbit.rep)}
                        )
                    if composition == CLOSED and q_orbit_min(
                        negated_twist_inertia(case), 2, q
                    ) != q_orbit_min(general.blocks[0].inertia, 2, q):
                        report.negated_twist_disagreements += 1

    report.identity_failures = [r for r in range(q + 1) if not representative_identity_holds(q, r)]

    for orbit in orbits(TORUS, q):
        for _ in range(samples):
            z1, z2 = random_unit(rng, q), random_unit(rng, q)
            before = parametrize_stratum(StratumPoint(orbit, (z1, z2)), q, check_generic=False)
            moved = TorusOrbit.of(TORUS, torus_dot(SWAP, orbit.rep, q), q)
            after = parametrize_stratum(StratumPoint(moved, (z2, z1)), q, check_generic=False)
            if not rep_isomorphic(before, after):
                report.invariance_failures.append(list(orbit.rep))
    return report
