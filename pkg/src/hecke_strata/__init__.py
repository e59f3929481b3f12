"""Exact combinatorics of the mod p pro-p Iwahori Hecke center for GL_n.

The subpackages cover the Weyl group on the weight lattice, the generic
and ``q = 0`` Bernstein algebras, the finite torus and its generic orbits,
the center with its Satake strata, and the tame Galois parameters of
generic strata.
"""

from .bernstein import (
    GenericElem,
    Laurent,
    TorusLaurentElem,
    embed_bernstein,
    multiply_generic,
    sym_basis,
    w_bullet,
)
from .center import (
    AugmentedElem,
    CentralElem,
    StratumPoint,
    central_basis,
    central_expansion,
    enumerate_strata,
    evaluate,
    evaluate_central,
    multiply_central,
    restrict_to_marked_chamber,
)
from .errors import (
    BadParams,
    BasisExpansionFailure,
    CompositionMismatch,
    HeckeStrataError,
    NotAntidominant,
    NotARepresentative,
    NotDominant,
    NotGeneric,
    OrderMismatch,
    RankMismatch,
)
from .finite_torus import (
    TorusOrbit,
    deep_bound,
    ev_weight,
    is_generic,
    is_n_deep,
    orbit_count,
    rep_system,
    torus_dot,
)
from .galois import (
    GaloisRep,
    RepBlock,
    TameType,
    build_rep,
    det_laws,
    f_extract,
    is_good,
    is_regular,
    jantzen_s,
    parametrize_stratum,
    rep_isomorphic,
    tau_L,
)
from .gl2_oracle import GL2Case, gl2_crosscheck, gl2_explicit
from .units import UnitValue
from .vinberg_zero import (
    ToricPoint,
    ZeroElem,
    idempotents,
    levi_orbit_point,
    multiply_zero,
    project_chamber,
    specialize_q0,
    stratum_of_point,
)
from .weyl_lattice import (
    Composition,
    HeckeParams,
    Perm,
    act,
    antidominant,
    common_chamber,
    coxeter_element,
    dot_act,
    length,
    q_exponent,
)
