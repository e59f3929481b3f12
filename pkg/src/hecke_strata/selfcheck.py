"""Randomised and exhaustive consistency suites, one per module.

Each suite takes the parameters and a seeded RNG and returns a list of
failure descriptions. The sizes are small so that the whole run takes a
few seconds; the test suite covers the same properties at full scale.
"""

from __future__ import annotations

import random
from itertools import permutations, product
from typing import Callable

from . import bernstein as bg
from . import center as ce
from . import finite_torus as ft
from . import galois as ga
from . import vinberg_zero as vz
from .gl2_oracle import gl2_crosscheck
from .units import UnitValue, unit_product
from .weyl_lattice import (
    Composition,
    HeckeParams,
    act,
    all_compositions,
    all_perms,
    antidominant,
    block_permutations,
    common_chamber,
    coxeter_element,
    dot_act,
    length,
    q_exponent,
    q_exponent_via_pairing,
)

Suite = Callable[[HeckeParams, random.Random], list[str]]


def _weight(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def _sorts_both(nu, nu2) -> bool:
    n = len(nu)
    for sigma in permutations(range(n)):
        if all(nu[sigma[k]] <= nu[sigma[k + 1]] and nu2[sigma[k]] <= nu2[sigma[k + 1]] for k in range(n - 1)):
            return True
    return False


def check_weyl_lattice(params: HeckeParams, rng: random.Random) -> list[str]:
    n = min(params.n, 4)
    failures = []
    perms = list(all_perms(n))
    for _ in range(20):
        nu = _weight(rng, n, 5)
        w, v = rng.choice(perms), rng.choice(perms)
        if act(w * v, nu) != act(w, act(v, nu)) or dot_act(w * v, nu) != dot_act(w, dot_act(v, nu)):
            failures.append(f"action law fails at {nu}")
        if antidominant(act(w, nu))[0] != antidominant(nu)[0] or length(act(w, nu)) != length(nu):
            failures.append(f"orbit invariance fails at {nu}")
        nu2 = _weight(rng, n, 5)
        if q_exponent(nu, nu2) != q_exponent_via_pairing(nu, nu2):
            failures.append(f"q exponents disagree at {nu}, {nu2}")
    for nu in product((-1, 0, 1), repeat=n):
        for nu2 in product((-1, 0, 1), repeat=n):
            if common_chamber(nu, nu2) != _sorts_both(nu, nu2):
                failures.append(f"common_chamber wrong at {nu}, {nu2}")
    return failures


def _generic_elem(rng: random.Random, n: int) -> bg.GenericElem:
    total = bg.GenericElem(n, {})
    for _ in range(rng.randint(1, 3)):
        coeff = bg.Laurent.from_dict({rng.randint(0, 2): rng.randint(-3, 3) or 1})
        total = total + bg.GenericElem.basis(_weight(rng, n, 5), coeff)
    return total


def check_bernstein(params: HeckeParams, rng: random.Random) -> list[str]:
    n = min(params.n, 4)
    failures = []
    for _ in range(30):
        a, b = _generic_elem(rng, n), _generic_elem(rng, n)
        if bg.embed_bernstein(bg.multiply_generic(a, b)) != bg.embed_bernstein(a) * bg.embed_bernstein(b):
            failures.append(f"embedding not multiplicative on {a}, {b}")
    for w in all_perms(n):
        nu = _weight(rng, n, 5)
        lhs = bg.embed_bernstein(bg.GenericElem.basis(act(w, nu)))
        if lhs != bg.w_bullet(w, bg.embed_bernstein(bg.GenericElem.basis(nu))):
            failures.append(f"equivariance fails for {w} at {nu}")
        lam = tuple(sorted(nu, reverse=True))
        if bg.w_bullet(w, bg.sym_basis(lam)) != bg.sym_basis(lam):
            failures.append(f"sym_{lam} not invariant under {w}")
    return failures


def check_vinberg_zero(params: HeckeParams, rng: random.Random) -> list[str]:
    n, q = min(params.n, 4), params.q
    failures = []
    perms = list(all_perms(n))
    for _ in range(30):
        a, b = _generic_elem(rng, n), _generic_elem(rng, n)
        za, zb = vz.specialize_q0(a), vz.specialize_q0(b)
        if vz.specialize_q0(bg.multiply_generic(a, b)) != vz.multiply_zero(za, zb):
            failures.append(f"specialisation not multiplicative on {a}, {b}")
        w = rng.choice(perms)
        lhs = vz.project_chamber(w, vz.multiply_zero(za, zb))
        if lhs != vz.multiply_zero(vz.project_chamber(w, za), vz.project_chamber(w, zb)):
            failures.append(f"projection {w} not multiplicative")
    for pt in vz.idempotents(n, q):
        if pt * pt != pt:
            failures.append(f"{pt} is not idempotent")
    for L in all_compositions(n):
        z = tuple(UnitValue(q, 1, rng.randrange(q - 1)) for _ in L.parts)
        if vz.stratum_of_point(vz.levi_orbit_point(L, z)) != L:
            failures.append(f"stratum round trip fails for {L}")
    return failures


def check_finite_torus(params: HeckeParams, rng: random.Random) -> list[str]:
    n, q = params.n, params.q
    failures = []
    perms = list(all_perms(n))
    for _ in range(30):
        mu, w = _weight(rng, n, 3 * q), rng.choice(perms)
        if ft.ev_weight(dot_act(w, mu), q) != ft.torus_dot(w, ft.ev_weight(mu, q), q):
            failures.append(f"dot action not equivariant at {mu}")
    for L in all_compositions(n):
        reps = ft.rep_system(L, q)
        if len({ft.TorusOrbit.of(L, mu, q) for mu in reps}) != len(reps) or len(reps) != ft.orbit_count(L, q):
            failures.append(f"representative system of {L} is not a bijection")
        for mu in reps:
            generic = ft.is_generic(mu, L, q)
            if ft.is_n_deep(mu, L, q) and not generic:
                failures.append(f"{mu} deep but not generic for {L}")
            if generic and any(not ft.is_generic(dot_act(w, mu), L, q) for w in block_permutations(L)):
                failures.append(f"generic orbits of {L} not stable at {mu}")
    return failures


def _stratum_point(rng: random.Random, L: Composition, q: int) -> ce.StratumPoint:
    orbit = rng.choice(list(ft.orbits(L, q)))
    z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (rng.choice((1, 2)) for _ in L.parts))
    return ce.StratumPoint(orbit, z)


def _central(rng: random.Random, n: int, q: int) -> ce.CentralElem:
    x = tuple(sorted(_weight(rng, n, 2)))
    t = tuple(rng.randrange(q - 1) for _ in range(n))
    return ce.central_basis(t, x, q)


def check_center(params: HeckeParams, rng: random.Random) -> list[str]:
    n, q = min(params.n, 3), params.q
    failures = []
    compositions = all_compositions(n)
    for _ in range(30):
        z1, z2 = _central(rng, n, q), _central(rng, n, q)
        product_ = ce.multiply_central(z1, z2)
        if any(c < 0 for c in product_.values()):
            failures.append(f"negative structure constant in {z1.key} * {z2.key}")
        pt = _stratum_point(rng, rng.choice(compositions), q)
        lhs = ce.evaluate(ce.combination(product_, q), pt, params)
        a, b = ce.evaluate_central(z1, pt, params), ce.evaluate_central(z2, pt, params)
        rhs = None if a is None or b is None else a * b
        if lhs != rhs:
            failures.append(f"evaluation not multiplicative for {z1.key}, {z2.key}")
        section = ce.restrict_to_marked_chamber
        if section(z1.expanded * z2.expanded) != section(z1.expanded) * section(z2.expanded):
            failures.append(f"section map not multiplicative for {z1.key}, {z2.key}")
    for L, count in ce.enumerate_strata(params):
        if count != len(ft.rep_system(L, q)):
            failures.append(f"component count of {L}")
    return failures


def check_jantzen_galois(params: HeckeParams, rng: random.Random) -> list[str]:
    n, q = min(params.n, 4), params.q
    failures = []
    for w in all_perms(n):
        t = w.order()
        mu = _weight(rng, n, q * q)
        a = ga.jantzen_s(w, mu, t, q)
        if tuple(q * x % (q**t - 1) for x in a) != act(w, a):
            failures.append(f"Frobenius equation fails for {w}, {mu}")
        scale = (q ** (2 * t) - 1) // (q**t - 1)
        if ga.jantzen_s(w, mu, 2 * t, q) != tuple(x * scale % (q ** (2 * t) - 1) for x in a):
            failures.append(f"norm tower fails for {w}, {mu}")
    for L in all_compositions(n):
        for mu in ft.rep_system(L, q):
            shifted = tuple(x + r for x, r in zip(mu, range(n - 1, -1, -1)))
            if ga.is_good(coxeter_element(L), shifted, q) != ga.is_regular(ga.tau_L(mu, L, q)):
                failures.append(f"good and regular disagree at {L}, {mu}")
            if not ft.is_generic(mu, L, q):
                continue
            z = tuple(UnitValue(q, 1, rng.randrange(q - 1)) for _ in L.parts)
            pt = ce.StratumPoint(ft.TorusOrbit(L, mu), z)
            rep = ga.parametrize_stratum(pt, q)
            inertia, frob = ga.det_laws(rep)
            if inertia.exponent_in(1) % (q - 1) != (sum(mu) + n * (n - 1) // 2) % (q - 1):
                failures.append(f"inertia determinant law fails at {L}, {mu}")
            if frob != unit_product(z, q):
                failures.append(f"Frobenius determinant law fails at {L}, {mu}")
            if ga.f_extract(rep) != (ga.tau_L(mu, L, q), z):
                failures.append(f"section property fails at {L}, {mu}")
            for w in block_permutations(L):
                moved = ce.StratumPoint(
                    ft.TorusOrbit.of(L, dot_act(w, mu), q), ga.block_permute_units(w, L, z)
                )
                if not ga.rep_isomorphic(rep, ga.parametrize_stratum(moved, q)):
                    failures.append(f"W(L) invariance fails at {L}, {mu}, {w}")
    return failures


def check_gl2(params: HeckeParams, rng: random.Random) -> list[str]:
    if params.q % 2 == 0:
        return []
    report = gl2_crosscheck(HeckeParams(2, params.p, params.f), samples=3, seed=rng.randrange(2**32))
    return [] if report.ok else [f"GL_2 cross-check: {report.to_json()}"]


SUITES: dict[str, Suite] = {
    "weyl_lattice": check_weyl_lattice,
    "bernstein_generic": check_bernstein,
    "vinberg_zero": check_vinberg_zero,
    "finite_torus": check_finite_torus,
    "center": check_center,
    "jantzen_galois": check_jantzen_galois,
    "gl2_oracle": check_gl2,
}


def run_all(params: HeckeParams, seed: int) -> dict[str, list[str]]:
    return {name: suite(params, random.Random(f"{seed}:{name}")) for name, suite in SUITES.items()}
