"""j_E for L_2 in a quaternion algebra, and extending a point across buildings.

Run with ``python demos/descent.py``.
"""

from btlattice import (CentralizerSpec, Factor, HermitianFrame, NotUnique, SplitLatticeFunction,
                       clf_holds, j_e, j_e_inverse, rank, unique_extension, unitary_descend)

lam = SplitLatticeFunction.of([0, "1/2"], d=2)
theta = j_e(lam, 2)
print(f"{lam} has rank {rank(lam)}; j_E gives {theta} of rank {rank(theta)}")
print("inverse:", j_e_inverse(theta, 2))

# quaternionic plane with an alternating-type form; the centralizer of L_2 is a unitary group
H = HermitianFrame.hyperbolic(1, epsilon=-1, d=2)
spec = CentralizerSpec((Factor("un", (0, 1), 2),))
x = (SplitLatticeFunction.of(["1/4", "-1/4"]),)
y = unitary_descend(x, spec, H)
print("descended point:", y, "CLF:", clf_holds(x, y, spec, H))
print("grid search finds:", unique_extension(x, spec, H, N=12))

# on the split orthogonal plane every self-dual point restricts correctly
Ho = HermitianFrame.hyperbolic(1)
spec = CentralizerSpec((Factor("un", (0, 1), 1),))
got = unique_extension((SplitLatticeFunction.of([0, 0]),), spec, Ho, N=4)
assert isinstance(got, NotUnique)
print("split orthogonal plane:", len(got.points), "solutions:", ", ".join(str(p) for p in got.points))
