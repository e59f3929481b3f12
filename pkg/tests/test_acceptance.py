"""The fifteen acceptance criteria, each at its stated sample size and time budget.

Every check is exact. A one-line PASS/FAIL summary per criterion is printed
at the end of the pytest run.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import product

import pytest

from hecke_strata.bernstein import GenericElem, Laurent, embed_bernstein, multiply_generic, w_bullet
from hecke_strata.center import (
    StratumPoint,
    central_basis,
    combination,
    evaluate,
    evaluate_central,
    multiply_central,
    restrict_to_marked_chamber,
)
from hecke_strata.finite_torus import (
    TorusOrbit,
    deep_bound,
    is_generic,
    is_n_deep,
    orbits,
    rep_system,
)
from hecke_strata.galois import (
    block_permute_units,
    build_rep,
    det_laws,
    f_extract,
    is_good,
    is_regular,
    jantzen_s,
    make_tame_type,
    parametrize_stratum,
    rep_isomorphic,
    tau_L,
)
from hecke_strata.gl2_oracle import gl2_crosscheck
from hecke_strata.units import UnitValue, unit_product
from hecke_strata.weyl_lattice import (
    Composition,
    HeckeParams,
    Perm,
    act,
    all_compositions,
    all_perms,
    block_permutations,
    common_chamber,
    coxeter_element,
    dot_act,
    q_exponent,
    q_exponent_via_pairing,
)

from oracles import common_chamber_brute, jantzen_brute


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, budget {seconds} s"


def rand_weight(rng, n, bound=5):
    return tuple(rng.randint(-bound, bound) for _ in range(n))


def rand_generic_elem(rng, n, max_terms=3):
    total = GenericElem(n, {})
    for _ in range(rng.randint(1, max_terms)):
        coeff = Laurent.from_dict({rng.randint(0, 2): rng.choice([-3, -2, -1, 1, 2, 3])})
        total = total + GenericElem.basis(rand_weight(rng, n), coeff)
    return total


@pytest.mark.criterion(1, "Bernstein embedding is multiplicative")
def test_criterion_01_bernstein_isomorphism():
    rng = random.Random(1)
    with budget(5):
        for _ in range(500):
            n = rng.randint(1, 4)
            a, b = rand_generic_elem(rng, n), rand_generic_elem(rng, n)
            assert embed_bernstein(multiply_generic(a, b)) == embed_bernstein(a) * embed_bernstein(b)


@pytest.mark.criterion(2, "Bernstein embedding is W-equivariant")
def test_criterion_02_w_equivariance():
    rng = random.Random(2)
    with budget(5):
        for n in range(1, 5):
            perms = list(all_perms(n))
            for _ in range(100):
                nu = rand_weight(rng, n)
                image = embed_bernstein(GenericElem.basis(nu))
                for w in perms:
                    assert embed_bernstein(GenericElem.basis(act(w, nu))) == w_bullet(w, image)


@pytest.mark.criterion(3, "common chamber by sorting equals brute force")
def test_criterion_03_chamber_rule():
    with budget(10):
        for n in range(1, 5):
            cube = list(product((-1, 0, 1), repeat=n))
            for nu in cube:
                for nu2 in cube:
                    assert common_chamber(nu, nu2) == common_chamber_brute(nu, nu2)
        rng = random.Random(3)
        for _ in range(10**4):
            nu, nu2 = rand_weight(rng, 5, 2), rand_weight(rng, 5, 2)
            assert common_chamber(nu, nu2) == common_chamber_brute(nu, nu2)


@pytest.mark.criterion(4, "length and pairing q-exponents agree")
def test_criterion_04_q_exponent():
    rng = random.Random(4)
    with budget(5):
        for _ in range(10**4):
            n = rng.randint(1, 5)
            nu, nu2 = rand_weight(rng, n), rand_weight(rng, n)
            e = q_exponent(nu, nu2)
            assert isinstance(e, int) and e >= 0
            assert e == q_exponent_via_pairing(nu, nu2)


QS = (3, 4, 5, 7, 8, 9)


@pytest.mark.criterion(5, "Jantzen exponents satisfy q a = w(a)")
def test_criterion_05_frobenius_equation():
    rng = random.Random(5)
    with budget(10):
        for q in QS:
            for n in range(1, 5):
                for w in all_perms(n):
                    t = w.order()
                    for _ in range(100):
                        mu = rand_weight(rng, n, 100)
                        a = jantzen_s(w, mu, t, q)
                        assert tuple(q * x % (q**t - 1) for x in a) == act(w, a)


@pytest.mark.criterion(6, "Jantzen exponents are compatible along norms")
def test_criterion_06_norm_tower():
    rng = random.Random(6)
    with budget(10):
        for q in QS:
            for n in range(1, 5):
                for w in all_perms(n):
                    t = w.order()
                    for _ in range(100):
                        mu = rand_weight(rng, n, 100)
                        a = jantzen_s(w, mu, t, q)
                        for k in (2, 3):
                            big = q ** (k * t) - 1
                            scale = big // (q**t - 1)
                            assert jantzen_s(w, mu, k * t, q) == tuple(x * scale % big for x in a)
        # the first sample is also checked against the literal sum
        assert jantzen_s(Perm((1, 2, 0)), (3, -1, 4), 3, 5) == jantzen_brute((1, 2, 0), (3, -1, 4), 3, 5)


def _good_regular_inputs(L, q):
    """Every residue vector when that is small, else the box [0, q]^n.

    Weights supported on the block starts are added in both cases. Both
    predicates only see the per-block cycle sums mod q^m - 1, and these
    weights realise every value of them.
    """
    n = L.n
    modulus = q**L.period - 1
    side = modulus if modulus**n <= 20000 else q + 1
    yield from product(range(side), repeat=n)
    per_block = [range(q**m - 1) for m in L.parts]
    for values in product(*per_block):
        mu = [0] * n
        for start, v in zip(L.starts, values):
            mu[start] = v
        yield tuple(mu)


@pytest.mark.criterion(7, "good pairs are exactly the regular types")
def test_criterion_07_good_iff_regular(record_property):
    count = 0
    with budget(5):
        for n in range(1, 4):
            for q in (2, 3, 4, 5):
                for L in all_compositions(n):
                    cox, t = coxeter_element(L), L.period
                    for mu in _good_regular_inputs(L, q):
                        a = jantzen_s(cox, mu, t, q)
                        assert is_good(cox, mu, q) == is_regular(make_tame_type(L, a, q))
                        count += 1
    record_property("note", f"{count} inputs")


def _generic_points(rng, q, n_max, count):
    candidates = [
        (L, mu) for n in range(1, n_max + 1) for L in all_compositions(n) for mu in rep_system(L, q)
        if is_generic(mu, L, q)
    ]
    for _ in range(count):
        L, mu = rng.choice(candidates)
        z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (rng.choice((1, 2)) for _ in L.parts))
        yield StratumPoint(TorusOrbit(L, mu), z)


@pytest.mark.criterion(8, "determinant laws")
def test_criterion_08_determinant_laws():
    rng = random.Random(8)
    with budget(5):
        for q in (3, 5):
            for pt in _generic_points(rng, q, 4, 200):
                n, mu = pt.composition.n, pt.torus_orbit.rep
                inertia, frob = det_laws(parametrize_stratum(pt, q))
                assert inertia == UnitValue(q, 1, sum(mu) + n * (n - 1) // 2)
                assert frob == unit_product(pt.z, q)


def _swap_test(orbit, z, q):
    L = orbit.composition
    swap = next(w for w in block_permutations(L) if not w.is_identity())
    before = parametrize_stratum(StratumPoint(orbit, z), q)
    moved = StratumPoint(TorusOrbit.of(L, dot_act(swap, orbit.rep), q), block_permute_units(swap, L, z))
    return rep_isomorphic(before, parametrize_stratum(moved, q))


@pytest.mark.criterion(9, "parametrization is constant on W(L)-orbits, GL_4, L = (2,2)")
def test_criterion_09_w_l_invariance(record_property):
    L = Composition((2, 2))
    rng = random.Random(9)
    notes = []
    with budget(20):
        # exhaustive over generic orbits, each with a few unit pairs
        for q in (3, 5, 7):
            generic = [o for o in orbits(L, q) if is_generic(o.rep, L, q)]
            notes.append(f"q={q}: {len(generic)} generic orbits")
            for orbit in generic:
                for _ in range(3):
                    z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (1, 2))
                    assert _swap_test(orbit, z, q)
        q = 5
        generic = [o for o in orbits(L, q) if is_generic(o.rep, L, q)]
        for _ in range(200):
            z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (rng.choice((1, 2)), rng.choice((1, 2))))
            assert _swap_test(rng.choice(generic), z, q)
    notes.append("200 sampled pairs at q=5")
    record_property("note", ", ".join(notes))


@pytest.mark.criterion(10, "n-deep implies generic")
def test_criterion_10_deep_implies_generic():
    with budget(5):
        for n in range(1, 4):
            for q in (5, 7):
                for L in all_compositions(n):
                    for mu in rep_system(L, q):
                        if is_n_deep(mu, L, q):
                            assert is_generic(mu, L, q)


@pytest.mark.criterion(11, "generic proportion for n = 3, L = (2,1)")
def test_criterion_11_generic_proportion(record_property):
    L = Composition((2, 1))
    proportions = []
    with budget(10):
        for p in (5, 7, 11, 13):
            reps = rep_system(L, p)
            proportion = Fraction(sum(is_generic(mu, L, p) for mu in reps), len(reps))
            assert proportion >= Fraction(*deep_bound(L, p))
            proportions.append(proportion)
    assert proportions == sorted(proportions)
    assert proportions[-1] > Fraction(1, 2)
    record_property("note", "proportions " + ", ".join(str(x) for x in proportions))


def _random_central(rng, n, q):
    x = tuple(sorted(rng.randint(-3, 3) for _ in range(n)))
    return central_basis(tuple(rng.randrange(q - 1) for _ in range(n)), x, q)


@pytest.mark.criterion(12, "center products and characters")
def test_criterion_12_center_characters():
    rng = random.Random(12)
    fields = [(3, 1), (5, 1), (7, 1), (2, 2), (3, 2)]
    with budget(10):
        for k in range(300):
            p, f = fields[k % len(fields)]
            n = rng.randint(1, 3)
            params = HeckeParams(n, p, f)
            q = params.q
            z1, z2 = _random_central(rng, n, q), _random_central(rng, n, q)
            product_ = multiply_central(z1, z2)
            assert all(isinstance(c, int) and c > 0 for c in product_.values())
            assert combination(product_, q) == z1.expanded * z2.expanded
            L = rng.choice(all_compositions(n))
            orbit = rng.choice(list(orbits(L, q)))
            z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (rng.choice((1, 2)) for _ in L.parts))
            pt = StratumPoint(orbit, z)
            a, b = evaluate_central(z1, pt, params), evaluate_central(z2, pt, params)
            expected = None if a is None or b is None else a * b
            assert evaluate(combination(product_, q), pt, params) == expected


@pytest.mark.criterion(13, "section to the quotient is multiplicative")
def test_criterion_13_section_map():
    rng = random.Random(13)
    section = restrict_to_marked_chamber
    with budget(5):
        for _ in range(200):
            n = rng.randint(1, 3)
            z1, z2 = _random_central(rng, n, 5), _random_central(rng, n, 5)
            assert section(z1.expanded * z2.expanded) == section(z1.expanded) * section(z2.expanded)


@pytest.mark.criterion(14, "GL_2 closed forms agree with the general parametrization")
def test_criterion_14_gl2_oracle(record_property):
    notes = []
    with budget(20):
        for p, f in [(3, 1), (5, 1), (7, 1), (3, 2)]:
            report = gl2_crosscheck(HeckeParams(2, p, f), samples=10, seed=14)
            assert report.ok, report.to_json()
            notes.append(f"q={p**f}: {report.comparisons} comparisons")
    record_property("note", ", ".join(notes))


@pytest.mark.criterion(15, "extraction is a section of the construction")
def test_criterion_15_section_property():
    rng = random.Random(15)
    with budget(5):
        for _ in range(300):
            q = rng.choice((3, 4, 5, 7))
            n = rng.randint(1, 4)
            L = rng.choice(all_compositions(n))
            mu = rand_weight(rng, n, 30)
            z = tuple(UnitValue(q, d, rng.randrange(q**d - 1)) for d in (rng.choice((1, 2, 3)) for _ in L.parts))
            assert f_extract(build_rep(L, mu, z, q)) == (tau_L(mu, L, q), z)
