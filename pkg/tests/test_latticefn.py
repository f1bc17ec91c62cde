from fractions import Fraction as Q
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from btlattice import oracle
from btlattice.errors import FrameMismatch, InvalidInput
from btlattice.latticefn import (AmbientFrame, LatticeChain, SplitLattice, SplitLatticeFunction,
                                 affine_combine, direct_sum, evaluate, invariant, lattice_class,
                                 monomial_act, rank, to_chain, translate)

offsets_st = st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=6), min_size=1, max_size=4)


def fn(offsets, d=1):
    return SplitLatticeFunction.of(offsets, d)


def test_evaluate_at_zero():
    assert evaluate(fn([0, "1/2"]), 0).exponents == (0, 0)


def test_evaluate_past_offset():
    assert evaluate(fn([0, "1/2"]), "1/2").exponents == (1, 0)


def test_evaluate_is_left_continuous():
    lam = fn([0, "1/2"])
    assert evaluate(lam, "1/2").exponents == (1, 0)
    assert evaluate(lam, Q(1, 2) + Q(1, 1000)).exponents == (1, 1)


def test_evaluate_over_quaternions():
    assert evaluate(fn([0, "1/4"], d=2), "1/4").exponents == (1, 0)


@given(offsets_st, st.sampled_from([1, 2, 3]), st.fractions(-3, 3, max_denominator=12))
def test_period_shift(offsets, d, t):
    lam = fn(offsets, d)
    assert evaluate(lam, t + Q(1, d)) == evaluate(lam, t).times_pi()


@given(offsets_st, st.sampled_from([1, 2]), st.fractions(-2, 2, max_denominator=12),
       st.fractions(0, 2, max_denominator=12))
def test_decreasing(offsets, d, t, step):
    lam = fn(offsets, d)
    assert evaluate(lam, t + step) <= evaluate(lam, t)


def test_translate_shifts_offsets():
    assert translate(fn([0, "1/2"]), "1/3").offsets == (Q(1, 3), Q(5, 6))


@given(offsets_st, st.fractions(-2, 2, max_denominator=6), st.fractions(-2, 2, max_denominator=6))
def test_translate_is_a_group_action(offsets, s, u):
    lam = fn(offsets)
    assert translate(translate(lam, s), u) == translate(lam, s + u)
    assert evaluate(translate(lam, s), u + s) == evaluate(lam, u)


def test_float_offsets_rejected():
    with pytest.raises(InvalidInput):
        fn([0.5])


def test_offsets_must_match_frame():
    with pytest.raises(FrameMismatch):
        SplitLatticeFunction(AmbientFrame(2, 1), (0,))


def test_lattice_class_pins_first_offset():
    assert lattice_class(fn(["1/3", "1/2"])).representative.offsets == (0, Q(1, 6))


def test_rank_one_point():
    assert rank(fn([0, 0, 0])) == 1
    assert invariant(fn([0, 0, 0])).entries == (3,)


def test_rank_iwahori_barycenter():
    lam = fn([0, "1/3", "2/3"])
    assert rank(lam) == 3
    assert invariant(lam).entries == (1, 1, 1)


def test_rank_counts_residues_not_offsets():
    assert rank(fn([0, 1, "1/2"])) == 2
    assert invariant(fn([0, 1, "1/2"])).entries == (1, 2)


def test_invariant_over_quaternions():
    lam = fn([0, "1/2", "1/4"], d=2)
    assert rank(lam) == 2
    assert invariant(lam).entries == (1, 2)


@given(st.lists(st.fractions(0, 1, max_denominator=6), min_size=1, max_size=4), st.sampled_from([1, 2, 3]))
def test_rank_and_chain_match_grid_scan(offsets, d):
    lam = fn(offsets, d)
    assert rank(lam) == oracle.scan_rank(lam)
    lats = oracle.scan_lattices(lam)
    chain = to_chain(lam)
    assert chain.rank == rank(lam)
    assert list(chain.quotient_dimensions()) == oracle.scan_quotient_dimensions(lam)
    assert set(chain.lattices) == set(lats)


@given(offsets_st, st.sampled_from([1, 2]))
def test_invariant_is_quotient_dimensions(offsets, d):
    lam = fn(offsets, d)
    from btlattice.cyclic import canonicalize
    assert invariant(lam) == canonicalize(to_chain(lam).quotient_dimensions())


def test_chain_must_decrease():
    f = AmbientFrame(2, 1)
    with pytest.raises(InvalidInput):
        LatticeChain((SplitLattice(f, (0, 0)), SplitLattice(f, (0, 0))))


def test_chain_quotients():
    f = AmbientFrame(2, 1)
    chain = LatticeChain((SplitLattice(f, (0, 0)), SplitLattice(f, (1, 0))))
    assert chain.quotient_dimensions() == (1, 1)


def test_colength():
    f = AmbientFrame(3, 1)
    big, small = SplitLattice(f, (0, 0, 0)), SplitLattice(f, (1, 2, 0))
    assert big.colength(small) == 3
    with pytest.raises(InvalidInput):
        small.colength(big)


def test_affine_combine_midpoint():
    mid = affine_combine(fn([0, 1]), fn([1, 0]), "1/2")
    assert mid.offsets == (Q(1, 2), Q(1, 2))


def test_affine_combine_endpoints():
    a, b = fn([0, "1/3"]), fn(["2/3", 1])
    assert affine_combine(a, b, 1) == a
    assert affine_combine(a, b, 0) == b


def test_affine_combine_checks():
    with pytest.raises(FrameMismatch):
        affine_combine(fn([0]), fn([0, 0]), "1/2")
    with pytest.raises(InvalidInput):
        affine_combine(fn([0]), fn([1]), 2)


def test_direct_sum():
    s = direct_sum(fn([0]), fn(["1/2", 1]))
    assert s.m == 3 and s.offsets == (0, Q(1, 2), 1)
    with pytest.raises(FrameMismatch):
        direct_sum(fn([0]), fn([0], d=2))


def brute_monomial(perm, exps, lam, t):
    """Lattice g Lambda(t) from g v_i = v_perm(i) pi_D^-e_i, coordinate by coordinate."""
    k = evaluate(lam, t).exponents
    out = [None] * lam.m
    for i in range(lam.m):
        out[perm[i]] = k[i] - exps[i]
    return tuple(out)


def test_monomial_act_against_definition():
    for d in (1, 2):
        lam = fn([0, "1/3", "-1/2"], d)
        for perm in permutations(range(3)):
            for exps in product(range(-1, 2), repeat=3):
                g = monomial_act(perm, exps, lam)
                for t in oracle._grid(d, list(lam.offsets) + list(g.offsets)):
                    assert evaluate(g, t).exponents == brute_monomial(perm, exps, lam, t)


def test_monomial_act_group_law():
    lam = fn([0, "1/3", "1/2"], 2)
    p1, e1 = (1, 2, 0), (1, 0, -1)
    p2, e2 = (2, 0, 1), (0, 2, 1)
    composed_perm = tuple(p2[p1[i]] for i in range(3))
    composed_exps = tuple(e1[i] + e2[p1[i]] for i in range(3))
    assert monomial_act(p2, e2, monomial_act(p1, e1, lam)) == monomial_act(composed_perm, composed_exps, lam)


def test_monomial_act_preserves_invariant():
    lam = fn([0, "1/4", "1/4", "3/4"])
    assert invariant(monomial_act((3, 1, 0, 2), (2, -1, 0, 5), lam)) == invariant(lam)


def test_rank_jump_in_quaternion_example():
    # the index-2 function with offsets (0, 1/2) has one lattice per period; over index 1 it has two
    assert rank(fn([0, "1/2"], 2)) == 1
    assert rank(fn([0, "1/2"], 1)) == 2


def test_breakpoints():
    assert fn([0, "1/3"]).breakpoints() == [0, Q(1, 3)]
    assert fn(["1/4"], 2).breakpoints() == [Q(1, 4)]
