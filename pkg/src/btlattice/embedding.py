"""Embedding types, local types, and the correspondence between them.

An embedding datum is a matrix lambda in Mint(f, r, m): column j is the
j-th block of a standard-form hereditary order of rank r, and lambda_kj
counts the basis vectors of that block on which the unramified E = L_f
acts through the k-th Galois twist.  The barycenter of the order, moved
into the apartment fixed by E and pushed down by j_E, has an oriented
local type mu, and the two are related by

    <row(lambda)> = <f r mu>^c.

`verify_main_theorem` computes both sides independently: the local
type from coordinates of the barycenter, and the complement class
combinatorially.

  >>> spec = EmbeddingSpec([[1, 0], [1, 3], [0, 0], [0, 1], [0, 1], [0, 0]])
  >>> local_type_from_embedding_type(spec.datum).scaled(12).entries
  (0, 0, 4, 2, 3, 2, 1)
  >>> verify_main_theorem(spec)
  True
"""

from dataclasses import dataclass
from fractions import Fraction

from ._rational import fractions, residue
from .cyclic import CyclicMatrixClass, canonical_rotation, canonicalize, complement, unflatten
from .descent import j_e
from .errors import InvalidInput, NotIntegral
from .latticefn import AmbientFrame, SplitLattice, SplitLatticeFunction


class EmbeddingSpec:
    """An embedding datum lambda in Mint(f, r, m) with its pearl layout.

    The basis of V is ordered by column j, then by row k, with row k
    repeated lambda_kj times; `layout` lists (k, j) for every basis
    vector, 0-based.
    """

    def __init__(self, datum):
        cls = datum if isinstance(datum, CyclicMatrixClass) else CyclicMatrixClass(datum)
        if not cls.is_mint():
            raise InvalidInput("an embedding datum needs a positive entry in every column")
        self.datum = cls

    @property
    def f(self):
        return self.datum.rows

    @property
    def r(self):
        return self.datum.cols

    @property
    def m(self):
        return self.datum.total

    @property
    def layout(self):
        lam = self.datum.matrix
        return tuple((k, j) for j in range(self.r) for k in range(self.f) for _ in range(lam[k][j]))

    def block_sizes(self):
        lam = self.datum.matrix
        return tuple(sum(lam[k][j] for k in range(self.f)) for j in range(self.r))

    def __repr__(self):
        return f"EmbeddingSpec({[list(r) for r in self.datum.matrix]!r})"


def pearl_barycenter_offsets(spec, d=None):
    """Offsets of the barycenter of the pearl embedding's order in the E-fixed apartment.

    The standard-form order with blocks n_1, ..., n_r has barycenter with
    offset (j - 1)/(r d) on block j.  The pearl embedding twists the
    basis vectors of row k by the k-th Galois power, and conjugating by
    pi_D^(k-1) on those vectors puts E in diagonal position; this moves
    their offsets by (k - 1)/d.  The index `d` of D defaults to f.
    """
    d = spec.f if d is None else d
    if d % spec.f:
        raise InvalidInput("L_f embeds in D only when f divides the index")
    r = spec.r
    offsets = tuple(Fraction(j, r * d) + Fraction(k, d) for k, j in spec.layout)
    return SplitLatticeFunction(AmbientFrame(spec.m, d), offsets)


class LocalType:
    """Oriented barycentric coordinates of a point, up to rotation."""

    def __init__(self, weights):
        w = fractions(weights)
        if not w or any(x < 0 for x in w) or sum(w) != 1:
            raise InvalidInput("barycentric weights are nonnegative and sum to 1")
        self.weights = canonical_rotation(w)

    def scaled(self, n):
        """The class of n * mu as an integer cyclic class."""
        vals = [n * x for x in self.weights]
        if any(v.denominator != 1 for v in vals):
            raise NotIntegral(f"{n} * mu is not integral")
        return canonicalize([int(v) for v in vals])

    def __eq__(self, other):
        if not isinstance(other, LocalType):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "LocalType(<" + ",".join(str(x) for x in self.weights) + ">)"


@dataclass(frozen=True)
class OrientedChamberFrame:
    """The vertices e_1 -> e_2 -> ... -> e_m of a chamber, as lattices Gamma_k.

    Gamma_1 > Gamma_2 > ... > Gamma_m > Gamma_1 pi_D with one-dimensional
    quotients; `order` lists the basis indices by increasing residue.
    """

    vertices: tuple
    order: tuple

    def vertex_functions(self):
        """Each vertex as a lattice function t -> Gamma_k p_D^ceil(d t)."""
        out = []
        for lat in self.vertices:
            d = lat.frame.d
            out.append(SplitLatticeFunction(lat.frame, tuple(Fraction(-k, d) for k in lat.exponents)))
        return tuple(out)


def _sorted_residues(point):
    d = point.d
    res = [residue(d * a) for a in point.offsets]
    order = tuple(sorted(range(point.m), key=lambda i: (res[i], i)))
    return order, [res[i] for i in order]


def chamber_frame(point):
    """An oriented chamber whose closure contains `point`."""
    order, _ = _sorted_residues(point)
    m = point.m
    verts = []
    for k in range(m):
        ex = [0] * m
        for pos, i in enumerate(order):
            ex[i] = 1 if pos < k else 0
        verts.append(SplitLattice(point.frame, tuple(ex)))
    return OrientedChamberFrame(tuple(verts), order)


def local_type_of(point):
    """Oriented barycentric coordinates of `point` in its chamber.

    With residues r_1 <= ... <= r_m of d * alpha, the weights are
    1 - (r_m - r_1), r_2 - r_1, ..., r_m - r_{m-1}.
    """
    if point.m == 0:
        raise InvalidInput("a point of a zero-dimensional space has no local type")
    _, res = _sorted_residues(point)
    w = [1 - (res[-1] - res[0])] + [b - a for a, b in zip(res, res[1:])]
    return LocalType(w)


def embedding_type_from_local_type(mu, f, r):
    """The matrix class lambda with <row(lambda)> = <f r mu>^c."""
    w = complement(mu.scaled(f * r))
    return CyclicMatrixClass(unflatten(w, f, r)[0])


def local_type_from_embedding_type(datum, f=None, r=None):
    """mu = <row(lambda)>^c / (f r)."""
    cls = datum if isinstance(datum, CyclicMatrixClass) else CyclicMatrixClass(datum)
    if (f is not None and f != cls.rows) or (r is not None and r != cls.cols):
        raise InvalidInput("the matrix shape must be f x r")
    if not cls.is_mint():
        raise InvalidInput("embedding types lie in Mint")
    n = cls.rows * cls.cols
    c = complement(cls.row_class())
    return LocalType(tuple(Fraction(e, n) for e in c.entries))


def geometric_local_type(spec, d=None):
    """Local type of j_E of the transported barycenter."""
    return local_type_of(j_e(pearl_barycenter_offsets(spec, d), spec.f))


def verify_main_theorem(spec, d=None):
    """Compare the geometric and the combinatorial local type of an embedding datum."""
    if not isinstance(spec, EmbeddingSpec):
        spec = EmbeddingSpec(spec)
    geo = geometric_local_type(spec, d)
    comb = local_type_from_embedding_type(spec.datum)
    try:
        geo.scaled(spec.f * spec.r)
    except NotIntegral:
        return False
    return geo == comb


def mu_from_rank_one(a, f):
    """Barycentric data ((f - a_m + a_1)/f, (a_2 - a_1)/f, ...) of a rank-one embedding."""
    a = [int(x) for x in a]
    return LocalType([Fraction(f - a[-1] + a[0], f)] + [Fraction(b - c, f) for c, b in zip(a, a[1:])])

