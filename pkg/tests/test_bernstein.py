import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_strata.bernstein import (
    GenericElem,
    Laurent,
    TorusLaurentElem,
    bernstein_height,
    embed_bernstein,
    multiply_generic,
    sym_basis,
    w_bullet,
)
from hecke_strata.errors import NotDominant, RankMismatch
from hecke_strata.weyl_lattice import Perm, act, all_perms

from oracles import height_brute, sym_brute

Q = Laurent.monomial(1)
SWAP = Perm.from_cycles(2, (1, 2))


def E(*nu, coeff=Laurent.monomial(0)):
    return GenericElem.basis(nu, coeff)


def e(*nu, power=0):
    return TorusLaurentElem(len(nu), {tuple(nu): Laurent.monomial(power)})


def elems(n, max_terms=3):
    coeff = st.dictionaries(st.integers(0, 2), st.integers(-3, 3), min_size=1, max_size=2).map(
        Laurent.from_dict
    )
    term = st.tuples(st.tuples(*[st.integers(-5, 5)] * n), coeff)
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: sum((GenericElem.basis(w, c) for w, c in ts), GenericElem(n, {}))
    )


def test_laurent_arithmetic():
    a = Laurent.from_dict({0: 1, 1: 2})
    assert a * a == Laurent.from_dict({0: 1, 1: 4, 2: 4})
    assert a - a == Laurent()
    assert a.shift(-3).min_degree() == -3
    assert a.at_zero() == 1


def test_multiply_examples():
    assert multiply_generic(E(1, 0), E(0, 1)) == E(1, 1, coeff=Q)
    assert multiply_generic(E(0, 0), E(3, -2)) == E(3, -2)
    assert multiply_generic(E(1, 0), E(1, 0)) == E(2, 0)
    with pytest.raises(RankMismatch):
        multiply_generic(E(1, 0), E(1, 0, 0))


def test_embed_examples():
    assert embed_bernstein(E(1, 0)) == e(1, 0, power=1)
    assert embed_bernstein(E(0, 1)) == e(0, 1)
    assert embed_bernstein(E(1, 1)) == e(1, 1)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(*[st.integers(-5, 5)] * n)))
def test_height_matches_root_sum(nu):
    assert bernstein_height(nu) == height_brute(nu) >= 0


def test_w_bullet_examples():
    assert w_bullet(SWAP, e(1, 0)) == e(0, 1, power=-1)
    assert w_bullet(SWAP, e(2, 2, power=3)) == e(2, 2, power=3)
    fixed = e(1, 0, power=1) + e(0, 1)
    assert w_bullet(SWAP, fixed) == fixed


def test_sym_examples():
    assert sym_basis((1, 0)) == e(1, 0, power=1) + e(0, 1)
    assert sym_basis((1, 1)) == e(1, 1)
    assert sym_basis((1, 0, 0)) == e(1, 0, 0, power=2) + e(0, 1, 0, power=1) + e(0, 0, 1)
    with pytest.raises(NotDominant):
        sym_basis((0, 1))


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 3, -1), (2, 0, 0, -1), (1, 1, 0, 0)])
def test_sym_matches_oracle(lam):
    expected = {mu: Laurent.monomial(k) for mu, k in sym_brute(lam).items()}
    assert dict(sym_basis(lam).terms) == expected
    for w in all_perms(len(lam)):
        assert w_bullet(w, sym_basis(lam)) == sym_basis(lam)


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(elems(n), elems(n), elems(n))))
def test_ring_axioms_and_homomorphism(triple):
    a, b, c = triple
    ab = multiply_generic(a, b)
    assert ab == multiply_generic(b, a)
    assert multiply_generic(ab, c) == multiply_generic(a, multiply_generic(b, c))
    assert embed_bernstein(ab) == embed_bernstein(a) * embed_bernstein(b)
    assert all(coeff.min_degree() >= 0 for coeff in embed_bernstein(ab).terms.values())


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(-5, 5)] * n)))
def test_equivariance(nu):
    for w in all_perms(len(nu)):
        assert embed_bernstein(E(*act(w, nu))) == w_bullet(w, embed_bernstein(E(*nu)))
