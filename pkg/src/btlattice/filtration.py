"""Square lattice functions, their skew parts, and CLF at coordinate level.

For a split Lambda with offsets alpha the square lattice function is

    End(Lambda)(t) = (+)_{i,j} p_D^ceil(d (t + alpha_j - alpha_i)) E_ij,

so it only depends on the differences alpha_i - alpha_j.  Under a
hermitian frame the adjoint involution sigma maps E_ij to a unit
multiple of E_tau(j),tau(i); the skew part of End(Lambda) then reveals
the difference alpha_i - alpha_j for every pair (i, j) whose elementary
matrix is not sigma-fixed.  `recover_differences` completes these known
differences along chains, reporting `Undetermined` when the known pairs
do not connect all indices.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from ._rational import as_fraction, ceil_div, fractions
from .errors import FrameMismatch, InconsistentData, InvalidInput
from .hermitian import FIRST, UNITARY, HermitianFrame, is_self_dual
from .latticefn import AmbientFrame, SplitLatticeFunction, jump_points


@dataclass(frozen=True)
class SquareFiltration:
    """End(Lambda) of a split Lambda: diff[i][j] = alpha_i - alpha_j.

    Entries may be None outside a block-diagonal support (see
    `intersect_blocks`).
    """

    frame: AmbientFrame
    diff: tuple

    def __post_init__(self):
        m = self.frame.m
        diff = tuple(tuple(None if x is None else as_fraction(x) for x in row) for row in self.diff)
        if len(diff) != m or any(len(row) != m for row in diff):
            raise FrameMismatch("difference matrix must be m x m")
        object.__setattr__(self, "diff", diff)

    def exponent(self, i, j, t):
        return entry_exponent(self, i, j, t)

    def support(self):
        m = self.frame.m
        return tuple((i, j) for i in range(m) for j in range(m) if self.diff[i][j] is not None)

    def breakpoints(self, lo=0):
        """Jump points in [lo, lo + 1/d) of all supported entries."""
        lo = as_fraction(lo)
        d = self.frame.d
        vals = {self.diff[i][j] for i, j in self.support()}
        return jump_points(vals, d, lo, lo + Fraction(1, d))


def square_of(lam):
    a = lam.offsets
    return SquareFiltration(lam.frame, tuple(tuple(ai - aj for aj in a) for ai in a))


def entry_exponent(S, i, j, t):
    """Exponent n such that End(Lambda)(t) meets the (i, j) entry in p_D^n."""
    delta = S.diff[i][j]
    if delta is None:
        raise InvalidInput(f"entry ({i}, {j}) is outside the support of the filtration")
    return ceil(S.frame.d * (as_fraction(t) - delta))


def restrict_to_centre(n, f):
    """p_D^n ∩ Delta = p_Delta^ceil(n/f) when pi_D^f generates p_Delta."""
    return ceil_div(n, f)


def intersect_blocks(S, blocks):
    """Keep only the entries whose row and column lie in the same block."""
    m = S.frame.m
    where = {}
    for b, block in enumerate(blocks):
        for i in block:
            if i in where or not 0 <= i < m:
                raise InvalidInput("blocks must partition range(m)")
            where[i] = b
    if len(where) != m:
        raise InvalidInput("blocks must partition range(m)")
    return SquareFiltration(S.frame, tuple(
        tuple(S.diff[i][j] if where[i] == where[j] else None for j in range(m)) for i in range(m)))


def restrict_indices(S, indices):
    """The square filtration of the sub-function on the listed basis vectors."""
    idx = tuple(indices)
    return SquareFiltration(AmbientFrame(len(idx), S.frame.d),
                            tuple(tuple(S.diff[i][j] for j in idx) for i in idx))


def is_sigma_fixed(H, i, j):
    """Whether the line k E_ij is fixed by sigma, so its skew part vanishes.

    E_ij^sigma is a unit times E_tau(j),tau(i).  Fixed lines need
    (i, j) = (tau(j), tau(i)), a trivial involution on the scalars and,
    off the diagonal, the sign c_i / c_tau(i) = epsilon to be +1.
    """
    if j != H.tau[i]:
        return False
    if H.kind != FIRST or H.d != 1:
        return False
    return i == j or H.epsilon == 1


@dataclass(frozen=True)
class SkewFiltrationData:
    """Known differences delta_ij = alpha_i - alpha_j read off the skew part."""

    frame: HermitianFrame
    known: dict = field(hash=False)

    def __post_init__(self):
        known = {(int(i), int(j)): as_fraction(v) for (i, j), v in self.known.items()}
        object.__setattr__(self, "known", known)


def skew_data(S, H):
    m = S.frame.m
    if S.frame != H.ambient:
        raise FrameMismatch("square filtration and hermitian frame disagree")
    known = {}
    for i in range(m):
        for j in range(m):
            if i != j and S.diff[i][j] is not None and not is_sigma_fixed(H, i, j):
                known[(i, j)] = S.diff[i][j]
    return SkewFiltrationData(H, known)


@dataclass(frozen=True)
class Undetermined:
    """The known pairs split the indices into several components."""

    components: tuple


def recover_differences(data):
    """Complete the known differences to a full m x m difference matrix.

    Union-find with rational potentials: each index gets a potential
    relative to its component root so that alpha_i - alpha_j is the
    difference of potentials.
    """
    m = data.frame.m
    parent = list(range(m))
    pot = [Fraction(0)] * m  # alpha_i - alpha_parent(i)

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        root = i
        # compress, accumulating potentials from the top down
        acc = Fraction(0)
        for node in reversed(path):
            acc += pot[node]
            pot[node] = acc
            parent[node] = root
        return root

    for (i, j), delta in sorted(data.known.items()):
        if (j, i) in data.known and data.known[(j, i)] != -delta:
            raise InconsistentData(f"delta[{i}][{j}] and delta[{j}][{i}] are not opposite")
        ri, rj = find(i), find(j)
        if ri == rj:
            if pot[i] - pot[j] != delta:
                raise InconsistentData(f"cycle through ({i}, {j}) does not sum to zero")
        else:
            # alpha_ri - alpha_rj = delta - pot[i] + pot[j]
            parent[ri] = rj
            pot[ri] = delta - pot[i] + pot[j]

    roots = [find(i) for i in range(m)]
    if len(set(roots)) > 1:
        comps = {}
        for i, r in enumerate(roots):
            comps.setdefault(r, []).append(i)
        return Undetermined(tuple(sorted(tuple(c) for c in comps.values())))
    return tuple(tuple(pot[i] - pot[j] for j in range(m)) for i in range(m))


@dataclass(frozen=True)
class Factor:
    """One simple factor of the centralizer of E in coordinates.

    `kind` is ``"gl"`` (no hermitian structure), ``"un"`` (a tau-stable
    block carrying a unitary group over E_i) or ``"plus"`` (a block W_i
    whose tau-image W_i' is the paired ``minus`` block, giving GL over
    E_i).  `f` is the unramified degree of E_i and indices are 0-based.
    """

    kind: str
    indices: tuple
    f: int = 1

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if self.kind not in ("gl", "un", "plus"):
            raise InvalidInput(f"unknown factor kind {self.kind!r}")
        if not self.indices:
            raise InvalidInput("factors are nonempty")
        if not isinstance(self.f, int) or self.f < 1:
            raise InvalidInput("unramified degrees are positive integers")


@dataclass(frozen=True)
class CentralizerSpec:
    """Block decomposition J = J_un ⊔ J_+ ⊔ J_- of the basis for a diagonal E."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def trivial(cls, m, kind="gl"):
        return cls((Factor(kind, tuple(range(m)), 1),))

    def blocks(self, H=None):
        out = []
        for fac in self.factors:
            out.append(fac.indices)
            if fac.kind == "plus":
                out.append(tuple(H.tau[i] for i in fac.indices))
        return out

    def check(self, frame, H=None):
        """Validate the decomposition against the ambient frame of y."""
        m, d = frame.m, frame.d
        kinds = {fac.kind for fac in self.factors}
        if H is None and kinds != {"gl"}:
            raise FrameMismatch("un and plus factors need a hermitian frame")
        if H is not None and "gl" in kinds:
            raise FrameMismatch("gl factors are only used without a hermitian frame")
        if H is not None and H.ambient != frame:
            raise FrameMismatch("hermitian frame does not match the lattice function")
        seen = []
        for fac in self.factors:
            if d % fac.f:
                raise FrameMismatch(f"degree {fac.f} does not divide the index {d}")
            seen.extend(fac.indices)
            if fac.kind == "plus":
                minus = [H.tau[i] for i in fac.indices]
                if set(minus) & set(fac.indices):
                    raise FrameMismatch("a plus block must be totally isotropic")
                seen.extend(minus)
            if fac.kind == "un":
                if any(H.tau[i] not in fac.indices for i in fac.indices):
                    raise FrameMismatch("unitary blocks must be stable under tau")
                if fac.f > 1 and not (H.kind == FIRST and H.d == 2 and fac.f == 2):
                    raise FrameMismatch("unramified unitary factors need E = L_2 inside a quaternion algebra")
        if sorted(seen) != list(range(m)):
            raise FrameMismatch("the blocks must partition the basis")
        if H is not None and H.kind == FIRST:
            trivial_un = [fac for fac in self.factors if fac.kind == "un" and fac.f == 1]
            if len(trivial_un) > 1:
                raise FrameMismatch("with an involution of the first kind at most one factor has E_i = F")

    def factor_frame(self, fac, H):
        """Hermitian frame of a unitary factor over its centralizer Delta_i."""
        d_new = H.d // fac.f
        kind = UNITARY if fac.f > 1 else H.kind
        return H.restrict(fac.indices, kind=kind, d=d_new)


def clf_holds(x, y, spec, H=None):
    """Whether the filtration of `y` restricted to the centralizer equals that of `x`.

    `x` is a tuple with one function per factor, over the factor frame
    of index d / f.  For each factor and each pair (p, q) of its basis
    vectors that carries information (for unitary factors: not
    sigma-fixed in the factor frame), the exponent of End(y) meeting
    Delta E_pq, i.e. ceil(ceil(d (t + y_q - y_p)) / f), is compared with
    ceil(d' (t + x_q - x_p)) at every breakpoint of one period.  With a
    hermitian frame `y` must also be self-dual; otherwise it is not a
    point of the unitary building and the answer is False.
    """
    spec.check(y.frame, H)
    if len(x) != len(spec.factors):
        raise FrameMismatch("need one centralizer point per factor")
    if H is not None and not is_self_dual(y, H):
        return False
    d = y.frame.d
    for fac, xi in zip(spec.factors, x):
        n, f = len(fac.indices), fac.f
        d_new = d // f
        if xi.frame != AmbientFrame(n, d_new):
            raise FrameMismatch(f"factor point must live in dimension {n} over index {d_new}")
        local = spec.factor_frame(fac, H) if fac.kind == "un" else None
        idx = fac.indices
        for p in range(n):
            for q in range(n):
                if p == q or (local is not None and is_sigma_fixed(local, p, q)):
                    continue
                dy = y.offsets[idx[q]] - y.offsets[idx[p]]
                dx = xi.offsets[q] - xi.offsets[p]
                for t in _breaks(dy, dx, d, f):
                    if ceil_div(ceil(d * (t + dy)), f) != ceil(d_new * (t + dx)):
                        return False
    return True


def _breaks(dy, dx, d, f):
    hi = Fraction(f, d)
    pts = set(jump_points([-dy], d, Fraction(0), hi))
    pts |= set(jump_points([-dx], d // f, Fraction(0), hi))
    return pts
