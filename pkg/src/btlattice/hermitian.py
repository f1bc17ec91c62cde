"""Hermitian frames with monomial Gram matrix, duality and self-dual points.

A `HermitianFrame` records an epsilon-hermitian form h on V in Witt
shape: basis vector v_i pairs only with v_tau(i), and c_i = h(v_i,
v_tau(i)) has valuation `gram_val[i]`.  Indices with tau(i) = i span the
anisotropic part.

For such a form the dual of a split lattice function is again split,
with offsets

    alpha#_j = nu(c_j) - alpha_tau(j),

and the self-dual functions (the points of the building of the unitary
group) are those with alpha_i + alpha_tau(i) = nu(c_i) for every i.

  >>> H = HermitianFrame.hyperbolic(1)
  >>> lam = SplitLatticeFunction.of(["1/3", 0])
  >>> dual_norm(lam, H).offsets
  (Fraction(0, 1), Fraction(-1, 3))
  >>> bary(lam, H).offsets
  (Fraction(1, 6), Fraction(-1, 6))
"""

from dataclasses import dataclass
from fractions import Fraction

from ._rational import as_fraction, fractions
from .errors import FrameMismatch, InvalidInput
from .latticefn import AmbientFrame, SplitLatticeFunction, affine_combine, direct_sum

FIRST = "first"
UNITARY = "unitary"


@dataclass(frozen=True)
class HermitianFrame:
    """Coordinate data of an epsilon-hermitian form in Witt shape.

    `kind` is ``"first"`` when the involution rho is trivial on the
    centre and ``"unitary"`` otherwise.  Indices are 0-based.
    """

    ambient: AmbientFrame
    epsilon: int
    kind: str
    tau: tuple
    gram_val: tuple

    def __post_init__(self):
        object.__setattr__(self, "tau", tuple(int(i) for i in self.tau))
        object.__setattr__(self, "gram_val", fractions(self.gram_val))
        m, d = self.ambient.m, self.ambient.d
        if self.epsilon not in (1, -1):
            raise InvalidInput("epsilon must be +1 or -1")
        if self.kind not in (FIRST, UNITARY):
            raise InvalidInput(f"unknown involution kind {self.kind!r}")
        if len(self.tau) != m or len(self.gram_val) != m:
            raise FrameMismatch("tau and gram_val must have one entry per basis vector")
        if sorted(self.tau) != list(range(m)):
            raise InvalidInput("tau must be a permutation of range(m)")
        for i in range(m):
            if self.tau[self.tau[i]] != i:
                raise InvalidInput("tau must be an involution")
            if self.gram_val[self.tau[i]] != self.gram_val[i]:
                raise InvalidInput("gram valuations must satisfy nu(c_tau(i)) = nu(c_i)")
            if (d * self.gram_val[i]).denominator != 1:
                raise InvalidInput("gram valuations must lie in (1/d)Z")
        if d > 2:
            raise InvalidInput("a skew field with an involution of the first or second kind has index 1 or 2")
        if self.kind == UNITARY and d != 1:
            raise InvalidInput("unitary involutions are only modelled over commutative D")
        if self.kind == FIRST and d == 1 and self.epsilon == -1 and self.anisotropic():
            raise InvalidInput("alternating forms have no anisotropic vectors")

    @classmethod
    def hyperbolic(cls, witt_index, epsilon=1, d=1, kind=FIRST, anisotropic=(), hyperbolic_val=0):
        """Witt layout: v_i pairs with v_{2r-1-i} for i < 2r, then the anisotropic indices.

        `anisotropic` lists the gram valuations of the anisotropic basis
        vectors; `hyperbolic_val` is either one valuation for every
        hyperbolic pair or a sequence with one entry per pair.
        """
        r = witt_index
        if isinstance(hyperbolic_val, (list, tuple)):
            pair_vals = fractions(hyperbolic_val)
            if len(pair_vals) != r:
                raise InvalidInput("need one valuation per hyperbolic pair")
        else:
            pair_vals = (as_fraction(hyperbolic_val),) * r
        aniso = fractions(anisotropic)
        m = 2 * r + len(aniso)
        tau = [2 * r - 1 - i for i in range(2 * r)] + list(range(2 * r, m))
        vals = [pair_vals[min(i, 2 * r - 1 - i)] for i in range(2 * r)] + list(aniso)
        return cls(AmbientFrame(m, d), epsilon, kind, tuple(tau), tuple(vals))

    @property
    def m(self):
        return self.ambient.m

    @property
    def d(self):
        return self.ambient.d

    def anisotropic(self):
        return tuple(i for i in range(self.m) if self.tau[i] == i)

    def witt_index(self):
        return (self.m - len(self.anisotropic())) // 2

    def is_hyperbolic(self):
        return not self.anisotropic()

    def restrict(self, indices, kind=None, d=None):
        """The frame induced on a tau-stable set of basis indices, relabelled 0..k-1."""
        indices = tuple(indices)
        pos = {i: n for n, i in enumerate(indices)}
        if any(self.tau[i] not in pos for i in indices):
            raise FrameMismatch("the index set is not stable under tau")
        return HermitianFrame(
            AmbientFrame(len(indices), self.d if d is None else d),
            self.epsilon,
            self.kind if kind is None else kind,
            tuple(pos[self.tau[i]] for i in indices),
            tuple(self.gram_val[i] for i in indices))


def _check(lam, H):
    if lam.frame != H.ambient:
        raise FrameMismatch(f"lattice function frame {lam.frame} does not match {H.ambient}")


def dual_norm(lam, H):
    """The dual lattice function Lambda#(t) = [Lambda((-t)+)]#."""
    _check(lam, H)
    a, nu, tau = lam.offsets, H.gram_val, H.tau
    return SplitLatticeFunction(lam.frame, tuple(nu[j] - a[tau[j]] for j in range(lam.m)))


def _pair_sums(lam, H):
    _check(lam, H)
    a = lam.offsets
    return [a[i] + a[H.tau[i]] - H.gram_val[i] for i in range(lam.m)]


def is_dominated(lam, H):
    """Whether alpha_i + alpha_tau(i) <= nu(c_i) for all i."""
    return all(s <= 0 for s in _pair_sums(lam, H))


def is_self_dual(lam, H):
    return all(s == 0 for s in _pair_sums(lam, H))


def bary(lam, H):
    """Midpoint of Lambda and its dual; always self-dual."""
    return affine_combine(lam, dual_norm(lam, H), Fraction(1, 2))


def dual_in_complement(lam, gram_val=0):
    """The dual of a function on W, as a function on the paired space W'.

    W and W' are totally isotropic and paired monomially so that the
    j-th basis vector of W' pairs with the (k-1-j)-th of W, matching the
    Witt layout of `HermitianFrame.hyperbolic`.  `gram_val` is one
    valuation, or one per pair listed in the order of W.
    """
    k = lam.m
    if isinstance(gram_val, (list, tuple)):
        nu = fractions(gram_val)
        if len(nu) != k:
            raise FrameMismatch("need one gram valuation per basis vector of W")
    else:
        nu = (as_fraction(gram_val),) * k
    a = lam.offsets
    return SplitLatticeFunction(lam.frame, tuple(nu[k - 1 - j] - a[k - 1 - j] for j in range(k)))


def hyperbolic_extend(lam, H):
    """Lambda (+) Lambda^{#,W'} on W (+) W', a self-dual function for `H`."""
    k = lam.m
    if not H.is_hyperbolic() or H.m != 2 * k or H.d != lam.d:
        raise FrameMismatch("need a hyperbolic frame of twice the dimension over the same skew field")
    nu = H.gram_val[:k]
    return direct_sum(lam, dual_in_complement(lam, list(nu)))


def induced_action(perm, exps, H):
    """Monomial element of U(h) induced from g = (perm, exps) acting on W.

    With W spanned by the first k basis vectors of the hyperbolic frame
    `H`, returns (perm', exps') on all 2k indices: g on W and the inverse
    adjoint on W'.  Offsets transform by `latticefn.monomial_act`.  The
    result preserves h up to units when all pairs share one gram valuation.
    """
    k = len(perm)
    if H.m != 2 * k:
        raise FrameMismatch("the hyperbolic frame must have dimension 2k")
    tau = H.tau
    big_perm = [None] * (2 * k)
    big_exps = [None] * (2 * k)
    for i in range(k):
        big_perm[i] = perm[i]
        big_exps[i] = exps[i]
        big_perm[tau[i]] = tau[perm[i]]
        big_exps[tau[i]] = -exps[i]
    return tuple(big_perm), tuple(big_exps)


def orthogonal_sum(H, H2):
    """The frame of h ⊥ h' on V ⊕ V'."""
    if (H.d, H.epsilon, H.kind) != (H2.d, H2.epsilon, H2.kind):
        raise FrameMismatch("orthogonal sums need the same skew field, sign and involution")
    shift = H.m
    return HermitianFrame(AmbientFrame(H.m + H2.m, H.d), H.epsilon, H.kind,
                          H.tau + tuple(i + shift for i in H2.tau), H.gram_val + H2.gram_val)
