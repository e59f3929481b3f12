import pytest

from hecke_strata.center import StratumPoint
from hecke_strata.errors import BadParams
from hecke_strata.finite_torus import TorusOrbit, orbits
from hecke_strata.galois import GaloisRep, RepBlock, parametrize_stratum, q_orbit_min, rep_isomorphic
from hecke_strata.gl2_oracle import (
    CLOSED,
    TORUS,
    GL2Case,
    gl2_crosscheck,
    gl2_explicit,
    gl2_labels,
    negated_twist_inertia,
    representative_identity_holds,
)
from hecke_strata.units import UnitValue
from hecke_strata.weyl_lattice import HeckeParams


def test_explicit_examples():
    q = 7
    Z = UnitValue(q, 2, 5)
    assert gl2_explicit(GL2Case("even", 0, 0, (Z,), q)).blocks == (RepBlock(2, 1, Z),)
    z1, z2 = UnitValue(q, 1, 2), UnitValue(q, 1, 3)
    torus = gl2_explicit(GL2Case("even", 0, 0, (z1, z2), q))
    assert torus.blocks == (RepBlock(1, 1, z1), RepBlock(1, 0, z2))
    odd = gl2_explicit(GL2Case("odd", 1, 0, (Z,), q))
    assert odd.blocks == (RepBlock(2, (2 - (q + 1)) % (q * q - 1), Z),)


def test_case_validation():
    with pytest.raises(BadParams):
        GL2Case("even", 0, 0, (UnitValue.one(4),), 4)
    with pytest.raises(ValueError):
        GL2Case("odd", 0, 0, (UnitValue.one(5),), 5)
    with pytest.raises(BadParams):
        gl2_crosscheck(HeckeParams(2, 2))


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_labels_cover_every_orbit(q):
    for composition in (CLOSED, TORUS):
        hit = {}
        for parity, i, s in gl2_labels(q):
            case = GL2Case(parity, i, s, (UnitValue.one(q),) * len(composition.parts), q)
            orbit = TorusOrbit.of(composition, case.weight, q)
            hit.setdefault(orbit, []).append((parity, i, s))
        assert set(hit) == set(orbits(composition, q))


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_crosscheck_passes(p, f):
    report = gl2_crosscheck(HeckeParams(2, p, f), samples=10, seed=p)
    assert report.ok, report.to_json()
    assert report.comparisons >= 10 * len(list(gl2_labels(p**f)))


def test_identity_first_instance():
    q = 5
    assert q_orbit_min(1, 2, q) == q_orbit_min(q, 2, q)
    assert all(representative_identity_holds(q, r) for r in range(q + 1))


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_negated_twist_agrees_when_2s_vanishes(q):
    for parity, i, s in gl2_labels(q):
        if 2 * s % (q - 1):
            continue
        case = GL2Case(parity, i, s, (UnitValue.one(q),), q)
        general = parametrize_stratum(StratumPoint(TorusOrbit.of(CLOSED, case.weight, q), case.units), q, check_generic=False)
        assert q_orbit_min(negated_twist_inertia(case), 2, q) == q_orbit_min(general.blocks[0].inertia, 2, q)


def test_negated_twist_is_wrong_off_the_diagonal():
    q = 5
    case = GL2Case("even", 0, 1, (UnitValue.one(q),), q)
    general = parametrize_stratum(StratumPoint(TorusOrbit.of(CLOSED, case.weight, q), case.units), q)
    assert rep_isomorphic(general, gl2_explicit(case))
    negated = GaloisRep(q, (RepBlock(2, negated_twist_inertia(case), case.units[0]),))
    assert not rep_isomorphic(general, negated)
