import ast
from fractions import Fraction as Q
from pathlib import Path

import btlattice.oracle as oracle
from btlattice.latticefn import AmbientFrame, SplitLattice, SplitLatticeFunction


def test_oracle_shares_only_data_classes():
    tree = ast.parse(Path(oracle.__file__).read_text())
    imported = {}
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom) and node.level:
            imported[node.module] = {a.name for a in node.names}
    assert imported == {"latticefn": {"AmbientFrame", "SplitLattice", "SplitLatticeFunction"}}


def test_dual_exponents_definition():
    # pairs (0, 1): v_0 pi^e is in M# iff e + k_1 + d nu >= 1
    assert oracle.dual_exponents((0, 0), (1, 0), (0, 0)) == (1, 1)
    assert oracle.dual_exponents((0, 1), (1, 0), (0, 0)) == (0, 1)
    assert oracle.dual_exponents((2,), (0,), (1,)) == (-2,)


def test_brute_dual_scaled_agrees_with_fraction_version():
    from btlattice.hermitian import HermitianFrame
    H = HermitianFrame.hyperbolic(1, d=2, anisotropic=("1/2",))
    lam = SplitLatticeFunction(H.ambient, (Q(1, 3), Q(-1, 4), Q(1, 6)))
    Qn = 4 * 2 * 60
    scaled = [int(a * Qn) for a in lam.offsets]
    dnu = [int(2 * v) for v in H.gram_val]
    for T in oracle.scaled_dual_check_points(scaled, Qn // 2):
        assert oracle.brute_dual_scaled(scaled, Qn, 2, T, H.tau, dnu) == \
            oracle.brute_dual_function_at(lam, H, Q(T, Qn)).exponents


def test_scan_lattices_iwahori():
    lam = SplitLatticeFunction.of([0, "1/2"])
    assert [x.exponents for x in oracle.scan_lattices(lam)] == [(0, 0), (1, 0)]
    assert oracle.scan_quotient_dimensions(lam) == [1, 1]
    assert oracle.scan_rank(lam) == 2


def test_scan_rank_vertex():
    assert oracle.scan_rank(SplitLatticeFunction.of(["1/3", "4/3"], 1)) == 1


def test_generated_lattice_degree_one():
    theta = SplitLatticeFunction.of(["1/3", 0])
    for s in (0, Q(1, 3), Q(1, 2)):
        assert oracle.brute_generated_lattice(theta, 1, s) == tuple(theta.evaluate(s).exponents)


def test_centre_exponent():
    assert [oracle.brute_centre_exponent(n, 2) for n in range(-3, 4)] == [-1, -1, 0, 0, 1, 1, 2]


def test_square_membership_is_monotone_in_e():
    lam = SplitLatticeFunction(AmbientFrame(2, 2), (Q(0), Q(1, 4)))
    e = oracle.brute_entry_exponent(lam, 0, 1, 0)
    assert not oracle.brute_square_membership(lam, 0, 1, e - 1, 0)
    assert all(oracle.brute_square_membership(lam, 0, 1, e + k, 0) for k in range(3))


def test_split_lattice_dual_involution():
    L = SplitLattice(AmbientFrame(3, 1), (2, -1, 0))
    tau, dnu = (2, 1, 0), (1, 0, 1)
    once = oracle.dual_exponents(L.exponents, tau, dnu)
    assert oracle.dual_exponents(once, tau, dnu) == L.exponents
