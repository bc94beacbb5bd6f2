import pytest
from hypothesis import given

from conftest import SUITE, monomial_sets
from reesaci.groebner import defining_ideal_oracle
from reesaci.homology import (
    LatticeCapExceeded,
    betti_table,
    depth,
    depth_chain_report,
    integer_rank,
    lcm_lattice,
    reduced_homology,
    taylor_betti_oracle,
    upper_koszul_faces,
)
from reesaci.instance import filtration, gamma0, validate_instance
from reesaci.monomial import hilbert, initial_ideal, minimalize

S111 = validate_instance(3, (3, 3, 3), (1, 1, 1))


def M(*gens):
    return minimalize(gens)


def test_integer_rank():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 1, 0], [0, 3, 1], [4, 0, 5]]) == 3
    assert integer_rank([]) == 0


def test_reduced_homology_examples():
    # circle: boundary of a triangle
    circle = [(), (0,), (1,), (2,), (0, 1), (1, 2), (0, 2)]
    assert reduced_homology(circle) == {1: 1}
    # two points
    assert reduced_homology([(), (0,), (1,)]) == {0: 1}
    # a solid simplex
    assert reduced_homology([(), (0,), (1,), (0, 1)]) == {}
    # the empty complex {∅}
    assert reduced_homology([()]) == {-1: 1}


def test_lcm_lattice():
    I = M((1, 0, 0), (0, 1, 0))
    assert lcm_lattice(I) == {(1, 0, 0), (0, 1, 0), (1, 1, 0)}
    assert lcm_lattice(M((1, 2))) == {(1, 2)}
    with pytest.raises(LatticeCapExceeded):
        lcm_lattice(I, cap=1)


def test_upper_koszul_faces():
    I = M((1, 0), (0, 1))
    assert upper_koszul_faces(I, (1, 1)) == [(), (0,), (1,)]


def test_complete_intersection():
    I = M((1, 0, 0, 0), (0, 1, 0, 0))
    B = betti_table(I)
    assert B.totals == {0: 1, 1: 2, 2: 1}
    assert B.pd == 2 and B.depth == 2 and B.is_cm


def test_triangle_ideal():
    I = M((1, 1, 0), (0, 1, 1), (1, 0, 1))
    B = betti_table(I)
    assert B.totals == {0: 1, 1: 3, 2: 2}
    assert B.pd == 2
    assert B.entries == taylor_betti_oracle(I).entries
    assert B.graded() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}


def test_single_generator():
    B = taylor_betti_oracle(M((2, 1, 0)))
    assert B.totals == {0: 1, 1: 1} and B.pd == 1


def test_ini_h0_is_cm():
    B = betti_table(initial_ideal(gamma0(S111), 7))
    assert B.depth == B.dim == 4 and B.is_cm


def test_ini_l_is_acm():
    B = betti_table(initial_ideal(defining_ideal_oracle(S111), 7))
    assert B.depth >= 3 and B.dim == 4
    assert B.acm_margin >= 0


def test_depth_chain_b111():
    chain = filtration(S111, defining_ideal_oracle(S111).members)
    steps = depth_chain_report(S111, chain)
    assert steps[0].depth == 4 and steps[0].colon_extended is None
    assert all(s.colon_extended for s in steps[1:])
    assert all(s.depth >= 3 for s in steps)
    assert steps[-1].depth == depth(initial_ideal(defining_ideal_oracle(S111), 7))


@given(monomial_sets(4, max_exp=2, max_size=6))
def test_betti_matches_taylor(gens):
    I = minimalize(gens, 4)
    assert betti_table(I).entries == taylor_betti_oracle(I).entries


@given(monomial_sets(4, max_exp=2, max_size=6))
def test_auslander_buchsbaum_and_euler(gens):
    I = minimalize(gens, 4)
    B = betti_table(I)
    assert B.depth + B.pd == I.nvars
    # depth never exceeds dimension
    assert B.depth <= hilbert(I).dimension
    # the alternating sum of Betti numbers of S/I vanishes for nonzero I
    assert sum((-1) ** i * n for i, n in B.totals.items()) == 0


@pytest.mark.parametrize("spec", SUITE[::250], ids=str)
def test_taylor_on_suite_ideals(spec):
    for M_ in (initial_ideal(gamma0(spec), spec.nvars), initial_ideal(defining_ideal_oracle(spec), spec.nvars)):
        if len(M_.gens) <= 12:
            assert betti_table(M_).entries == taylor_betti_oracle(M_).entries
