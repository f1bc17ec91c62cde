"""The descent map j_E for diagonal unramified embeddings, and its unitary version.

Let E = L_f sit diagonally in Matr_m(D), so that its centralizer is
Matr_m(Delta) with Delta of index d/f.  A split lattice function with
offsets alpha is fixed by E^x and j_E sends it to the lattice function
over Delta with the same offsets; only the granularity of the ceiling
changes from 1/d to f/d.  The inverse is

    Lambda(s) = (+)_{k=0}^{f-1} Theta(s - k/d) pi_D^k.

For the unitary group, the centralizer of E splits into unitary
factors over the tau-stable blocks and general linear factors over
pairs of isotropic blocks W_i, W_i'; `unitary_descend` assembles the
self-dual point of the big building from points of those factors.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, lcm

from ._rational import denominators_lcm
from .errors import FrameMismatch, InvalidDegree, InvalidGrid, InvalidInput
from .filtration import clf_holds
from .hermitian import is_self_dual
from .latticefn import AmbientFrame, SplitLatticeFunction, lattice_class


@dataclass(frozen=True)
class DescentContext:
    source: AmbientFrame
    f: int

    def __post_init__(self):
        if not isinstance(self.f, int) or self.f < 1 or self.source.d % self.f:
            raise InvalidDegree(f"the degree {self.f} does not divide the index {self.source.d}")

    @property
    def target(self):
        return AmbientFrame(self.source.m, self.source.d // self.f)


def j_e(lam, f):
    """j_E for the diagonal L_f: same offsets over the centralizer Delta."""
    ctx = DescentContext(lam.frame, f)
    return SplitLatticeFunction(ctx.target, lam.offsets)


def j_e_inverse(theta, f):
    """Inverse of `j_e`: the o_D-lattice function generated by Theta."""
    if not isinstance(f, int) or f < 1:
        raise InvalidDegree("the degree must be a positive integer")
    return SplitLatticeFunction(AmbientFrame(theta.m, theta.d * f), theta.offsets)


def descend(x, spec):
    """Assemble a point of the building of GL_m(D) from per-factor points (no hermitian form)."""
    if len(x) != len(spec.factors):
        raise FrameMismatch("need one centralizer point per factor")
    m = sum(len(fac.indices) for fac in spec.factors)
    offsets = [None] * m
    d = None
    for fac, xi in zip(spec.factors, x):
        if fac.kind != "gl":
            raise FrameMismatch("descend handles gl factors only; use unitary_descend")
        y = j_e_inverse(xi, fac.f)
        d = y.d if d is None else d
        if y.d != d or xi.m != len(fac.indices):
            raise FrameMismatch("factor frames are inconsistent")
        for i, a in zip(fac.indices, y.offsets):
            offsets[i] = a
    if any(a is None for a in offsets):
        raise FrameMismatch("the factors must cover the basis")
    return SplitLatticeFunction(AmbientFrame(m, d), tuple(offsets))


def unitary_descend(x, spec, H):
    """The self-dual point j(x) = psi(phi_un x phi_GL) of the building of U(h).

    `x` holds one function per factor of `spec`: for a unitary factor a
    self-dual function over its factor frame, for a plus factor an
    arbitrary function on W_i.  The minus block W_i' receives the dual
    of the plus block, alpha_tau(j) = nu(c_j) - alpha_j.
    """
    spec.check(H.ambient, H)
    if len(x) != len(spec.factors):
        raise FrameMismatch("need one centralizer point per factor")
    d = H.d
    offsets = [None] * H.m
    for fac, xi in zip(spec.factors, x):
        if xi.frame != AmbientFrame(len(fac.indices), d // fac.f):
            raise FrameMismatch(f"factor point must live in dimension {len(fac.indices)} "
                                f"over index {d // fac.f}")
        if fac.kind == "un" and not is_self_dual(xi, spec.factor_frame(fac, H)):
            raise InvalidInput("unitary factors need self-dual inputs")
        y = j_e_inverse(xi, fac.f)
        for i, a in zip(fac.indices, y.offsets):
            offsets[i] = a
            if fac.kind == "plus":
                offsets[H.tau[i]] = H.gram_val[i] - a
    return SplitLatticeFunction(H.ambient, tuple(offsets))


def image_characterization(lam, spec, H=None):
    """Whether `lam` is a point of the image of the descent map for `spec`.

    A split function is fixed by the diagonal E, so it lies in the image
    exactly when the frames fit (and it is self-dual when `H` is given).
    """
    try:
        spec.check(lam.frame, H)
    except FrameMismatch:
        return False
    if H is not None and not is_self_dual(lam, H):
        return False
    return True


@dataclass(frozen=True)
class NotUnique:
    """All grid points satisfying CLF, when there is not exactly one."""

    points: tuple


def enumerate_classes(m, N, lo=Fraction(0), hi=Fraction(1)):
    """Offset vectors with alpha_1 = 0 and the others in (1/N)Z ∩ [lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    start, stop = ceil(lo * N), ceil(hi * N)
    values = [Fraction(n, N) for n in range(start, stop)]
    for rest in product(values, repeat=m - 1):
        yield (Fraction(0),) + rest


def unique_extension(x, spec, H=None, N=None, window=(-1, 1)):
    """Search a grid for every y with clf_holds(x, y, spec, H).

    Candidates are classes of offset vectors with alpha_1 = 0 and the
    remaining offsets in (1/N)Z ∩ `window`.  With a hermitian frame, a
    class is kept when it contains a self-dual function; that function
    is alpha - s/2 for the common value s of alpha_i + alpha_tau(i) - nu(c_i).
    Returns the only solution, or `NotUnique` with all of them.
    """
    spec.check(_target_frame(x, spec), H)
    d = _target_frame(x, spec).d
    base = lcm(d, *(denominators_lcm(xi.offsets) for xi in x))
    if N is None:
        N = 2 * d * base
    if N % base:
        raise InvalidGrid(f"grid 1/{N} is not a refinement of 1/{base}")
    m = sum(len(b) for b in spec.blocks(H))
    frame = AmbientFrame(m, d)
    found = []
    seen = set()
    for alpha in enumerate_classes(m, N, *window):
        if H is not None:
            sums = {alpha[i] + alpha[H.tau[i]] - H.gram_val[i] for i in range(m)}
            if len(sums) != 1:
                continue
            s = sums.pop() / 2
            alpha = tuple(a - s for a in alpha)
        y = SplitLatticeFunction(frame, alpha)
        key = y.offsets if H is not None else lattice_class(y).representative.offsets
        if key in seen:
            continue
        if clf_holds(x, y, spec, H):
            seen.add(key)
            found.append(y)
    if len(found) == 1:
        return found[0]
    return NotUnique(tuple(found))


def _target_frame(x, spec):
    if len(x) != len(spec.factors):
        raise FrameMismatch("need one centralizer point per factor")
    m = 0
    d = None
    for fac, xi in zip(spec.factors, x):
        m += len(fac.indices) * (2 if fac.kind == "plus" else 1)
        dd = xi.d * fac.f
        if d is not None and dd != d:
            raise FrameMismatch("factor points imply different indices for D")
        d = dd
    return AmbientFrame(m, d)
