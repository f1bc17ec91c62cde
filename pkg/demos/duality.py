"""Duals, barycenters and the split orthogonal plane.

Run with ``python demos/duality.py``.
"""

from fractions import Fraction

from btlattice import (HermitianFrame, SplitLatticeFunction, bary, dual_norm, is_self_dual,
                       recover_differences, skew_data, square_of)
from btlattice.oracle import brute_dual_function_at

H = HermitianFrame.hyperbolic(1)
lam = SplitLatticeFunction.of(["1/3", 0])
dual = dual_norm(lam, H)
print("Lambda:", lam, " dual:", dual)
for t in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
    print(f"  at t={t}: closed form {dual.evaluate(t).exponents}, "
          f"definition {brute_dual_function_at(lam, H, t).exponents}")

mid = bary(lam, H)
print("barycenter:", mid, "self-dual:", is_self_dual(mid, H))

# On the split orthogonal plane the skew part of End(Lambda) carries no off-diagonal entry,
# so differences of offsets cannot be read back.
print("split plane:", recover_differences(skew_data(square_of(mid), H)))

# The symplectic plane has no sigma-fixed lines.
Hs = HermitianFrame.hyperbolic(1, epsilon=-1)
diffs = recover_differences(skew_data(square_of(mid), Hs))
print("symplectic plane:", [[str(x) for x in row] for row in diffs])
