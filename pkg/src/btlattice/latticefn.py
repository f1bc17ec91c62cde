"""Split o_D-lattice functions on the standard apartment.

Fix a D-basis v_1, ..., v_m of V, where D has index d, so that
nu(pi_F) = 1 and nu(pi_D) = 1/d.  A split lattice function is given by
an offset vector alpha in Q^m:

    Lambda(t) = (+)_i  v_i p_D^ceil(d (t - alpha_i)).

It is decreasing, left-continuous and satisfies
Lambda(t + 1/d) = Lambda(t) pi_D.  A lattice of the form
(+) v_i p_D^k_i is a `SplitLattice`, recorded by its exponent vector k.

  >>> lam = SplitLatticeFunction.of([0, "1/2"], d=1)
  >>> lam.evaluate("1/2").exponents
  (1, 0)
  >>> rank(lam), invariant(lam).entries
  (2, (1, 1))
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from ._rational import as_fraction, fractions, residue
from .cyclic import canonicalize
from .errors import FrameMismatch, InvalidInput


@dataclass(frozen=True)
class AmbientFrame:
    """Dimension `m` of V over D and the index `d` of D."""

    m: int
    d: int = 1

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise InvalidInput(f"dimension must be a nonnegative integer, got {self.m!r}")
        if not isinstance(self.d, int) or self.d < 1:
            raise InvalidInput(f"index must be a positive integer, got {self.d!r}")


@dataclass(frozen=True)
class SplitLattice:
    frame: AmbientFrame
    exponents: tuple

    def __post_init__(self):
        if len(self.exponents) != self.frame.m:
            raise FrameMismatch("exponent vector does not match the frame dimension")

    def __le__(self, other):
        # inclusion self ⊆ other
        _same_frame(self.frame, other.frame)
        return all(a >= b for a, b in zip(self.exponents, other.exponents))

    def __lt__(self, other):
        return self <= other and self != other

    def contains(self, other):
        return other <= self

    def times_pi(self, n=1):
        """The lattice multiplied by pi_D^n."""
        return SplitLattice(self.frame, tuple(k + n for k in self.exponents))

    def colength(self, sub):
        """kappa_D-dimension of self / sub, for a sublattice `sub`."""
        if not sub <= self:
            raise InvalidInput("not a sublattice")
        return sum(b - a for a, b in zip(self.exponents, sub.exponents))


def _same_frame(a, b):
    if a != b:
        raise FrameMismatch(f"frames differ: {a} vs {b}")


@dataclass(frozen=True)
class SplitLatticeFunction:
    """A lattice function split by the standard basis, given by its offsets."""

    frame: AmbientFrame
    offsets: tuple

    def __post_init__(self):
        object.__setattr__(self, "offsets", fractions(self.offsets))
        if len(self.offsets) != self.frame.m:
            raise FrameMismatch(
                f"{len(self.offsets)} offsets given for a frame of dimension {self.frame.m}")

    @classmethod
    def of(cls, offsets, d=1):
        offsets = fractions(offsets)
        return cls(AmbientFrame(len(offsets), d), offsets)

    @property
    def m(self):
        return self.frame.m

    @property
    def d(self):
        return self.frame.d

    def evaluate(self, t):
        return evaluate(self, t)

    def translate(self, s):
        return translate(self, s)

    def normalized(self):
        return lattice_class(self).representative

    def breakpoints(self, lo=0, hi=None):
        """Jump points t in [lo, hi) of the step function; `hi` defaults to lo + 1/d."""
        lo = as_fraction(lo)
        hi = lo + Fraction(1, self.d) if hi is None else as_fraction(hi)
        return jump_points(self.offsets, self.d, lo, hi)

    def __str__(self):
        return f"Λ[d={self.d}]({', '.join(str(a) for a in self.offsets)})"


def jump_points(values, d, lo, hi):
    """Sorted points t in [lo, hi) with d(t - v) integral for some v in `values`."""
    pts = set()
    step = Fraction(1, d)
    for v in values:
        # first t >= lo of the form v + n/d
        n = ceil(d * (lo - v))
        t = v + n * step
        while t < hi:
            pts.add(t)
            t += step
    return sorted(pts)


def evaluate(lam, t):
    """The lattice Lambda(t), exponents ceil(d (t - alpha_i))."""
    t = as_fraction(t)
    d = lam.frame.d
    return SplitLattice(lam.frame, tuple(ceil(d * (t - a)) for a in lam.offsets))


def translate(lam, s):
    """(Lambda + s)(t) = Lambda(t - s): every offset moves by s."""
    s = as_fraction(s)
    return SplitLatticeFunction(lam.frame, tuple(a + s for a in lam.offsets))


@dataclass(frozen=True)
class LatticeFunctionClass:
    """A lattice function modulo translation, pinned by alpha_1 = 0."""

    representative: SplitLatticeFunction

    def __post_init__(self):
        rep = self.representative
        if rep.m and rep.offsets[0] != 0:
            raise InvalidInput("class representatives have first offset 0; use lattice_class()")


def lattice_class(lam):
    if lam.m == 0:
        return LatticeFunctionClass(lam)
    return LatticeFunctionClass(translate(lam, -lam.offsets[0]))


def affine_combine(lam, other, weight):
    """The point weight * lam + (1 - weight) * other of the common apartment."""
    _same_frame(lam.frame, other.frame)
    w = as_fraction(weight)
    if not 0 <= w <= 1:
        raise InvalidInput("the weight of an affine combination must lie in [0, 1]")
    return SplitLatticeFunction(
        lam.frame, tuple(w * a + (1 - w) * b for a, b in zip(lam.offsets, other.offsets)))


def direct_sum(lam, other):
    """(Lambda (+) Lambda')(t) = Lambda(t) (+) Lambda'(t)."""
    if lam.frame.d != other.frame.d:
        raise FrameMismatch("direct sums need the same skew field index")
    return SplitLatticeFunction(AmbientFrame(lam.m + other.m, lam.d), lam.offsets + other.offsets)


def residues(lam):
    """Fractional parts of d * alpha_i."""
    return tuple(residue(lam.d * a) for a in lam.offsets)


def rank(lam):
    """Number of distinct lattices in one period, up to multiplication by pi_D."""
    return len(set(residues(lam)))


@dataclass(frozen=True)
class LatticeChain:
    """Gamma_0 > Gamma_1 > ... > Gamma_{r-1} > Gamma_0 pi_D."""

    lattices: tuple

    def __post_init__(self):
        ls = self.lattices
        if not ls:
            raise InvalidInput("a lattice chain is nonempty")
        closing = ls[0].times_pi()
        for a, b in zip(ls, ls[1:] + (closing,)):
            if not b < a:
                raise InvalidInput("lattice chains are strictly decreasing within a period")

    @property
    def rank(self):
        return len(self.lattices)

    def quotient_dimensions(self):
        ls = self.lattices + (self.lattices[0].times_pi(),)
        return tuple(a.colength(b) for a, b in zip(ls, ls[1:]))


def to_chain(lam):
    """The distinct lattices of one period, decreasing, starting with Lambda(0)."""
    d = lam.d
    points = sorted({Fraction(0)} | {r / d for r in residues(lam)})
    chain = []
    for t in points:
        lat = evaluate(lam, t)
        if not chain or lat != chain[-1]:
            chain.append(lat)
    return LatticeChain(tuple(chain))


def invariant(lam):
    """Cyclic class of the residue-group sizes, i.e. of the chain's quotient dimensions."""
    res = residues(lam)
    return canonicalize([res.count(r) for r in sorted(set(res))])


def monomial_act(perm, exps, lam):
    """Act by the monomial matrix sending v_i to v_{perm[i]} pi_D^(-exps[i]).

    The new offsets are alpha'_{perm[i]} = alpha_i + exps[i] / d; indices
    are 0-based.
    """
    m = lam.m
    perm = tuple(perm)
    exps = tuple(int(e) for e in exps)
    if sorted(perm) != list(range(m)) or len(exps) != m:
        raise InvalidInput("need a permutation of range(m) and m exponents")
    new = [None] * m
    for i in range(m):
        new[perm[i]] = lam.offsets[i] + Fraction(exps[i], lam.d)
    return SplitLatticeFunction(lam.frame, tuple(new))
