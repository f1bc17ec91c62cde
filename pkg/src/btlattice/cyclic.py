"""Vectors and matrices up to cyclic permutation of their entries.

A class is stored through its canonical representative, the
lexicographically least rotation.  Two vectors are in the same class
exactly when their canonical representatives agree, which makes the
frozen dataclasses below hashable and comparable.

The classes of nonnegative integer vectors with a nonzero entry can be
written as cyclic lists of pairs (value, gap); swapping the roles of
values and gaps gives the complement, an involution between classes of
length s and total t and classes of length t and total s.

  >>> w = canonicalize([3, 2, 1, 0, 0, 4, 2])
  >>> w.complement().entries
  (0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 3)
  >>> w.complement().complement() == w
  True
"""

from dataclasses import dataclass

from .errors import InvalidInput, NoNonzeroEntry, NoValidMatrix


_SHORT = 48


def least_rotation(seq):
    """Index at which the lexicographically least rotation of `seq` starts.

    Elements only need to be comparable, so tuples of rationals work too.
    Long inputs use Booth's algorithm, linear in ``len(seq)``; short ones
    compare all rotations directly, which is faster in practice.

      >>> least_rotation([5, 1, 1])
      1
    """
    n = len(seq)
    if n == 0:
        return 0
    if n <= _SHORT:
        t = tuple(seq)
        return min(range(n), key=lambda k: t[k:] + t[:k])
    return booth(seq)


def booth(seq):
    """Booth's least-rotation algorithm."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    fail = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            # here i == -1
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def rotate(seq, k):
    seq = tuple(seq)
    return seq[k:] + seq[:k]


def canonical_rotation(seq):
    seq = tuple(seq)
    return rotate(seq, least_rotation(seq))


@dataclass(frozen=True)
class CyclicVectorClass:
    """Class of a nonnegative integer vector under cyclic rotation.

    `entries` is always the canonical (least) rotation; build instances
    with `canonicalize`.
    """

    entries: tuple

    def __post_init__(self):
        if len(self.entries) == 0:
            raise InvalidInput("a cyclic class needs at least one entry")
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise InvalidInput(f"entries must be nonnegative integers, got {e!r}")
        if canonical_rotation(self.entries) != self.entries:
            raise InvalidInput("entries are not the canonical rotation; use canonicalize()")

    @property
    def length(self):
        return len(self.entries)

    @property
    def total(self):
        return sum(self.entries)

    def is_moprow(self, s=None, t=None):
        """Whether the class lies in MopRow(s, t), i.e. has length `s`, total `t` and t >= 1."""
        if self.total < 1:
            return False
        return (s is None or self.length == s) and (t is None or self.total == t)

    def rotations(self):
        """All distinct rotations of the representative, in increasing order."""
        return sorted(set(rotate(self.entries, k) for k in range(self.length)))

    def pairs(self):
        return to_pairs(self)

    def complement(self):
        return complement(self)

    def __str__(self):
        return "<" + ",".join(str(e) for e in self.entries) + ">"


def canonicalize(v):
    """The cyclic class of the integer vector `v`.

      >>> canonicalize([5, 1, 1]).entries
      (1, 1, 5)
    """
    v = tuple(v)
    if not v:
        raise InvalidInput("cannot canonicalize an empty vector")
    return CyclicVectorClass(canonical_rotation(v))


@dataclass(frozen=True)
class PairsForm:
    """A cyclic list of (value, gap) pairs, stored in canonical rotation."""

    pairs: tuple

    def __post_init__(self):
        if not self.pairs:
            raise InvalidInput("a pairs form needs at least one pair")
        for a, b in self.pairs:
            if not (isinstance(a, int) and isinstance(b, int) and a > 0 and b > 0):
                raise InvalidInput(f"pairs need positive integer values and gaps, got {(a, b)!r}")
        if canonical_rotation(self.pairs) != self.pairs:
            raise InvalidInput("pairs are not in canonical rotation; use pairs_form()")

    @property
    def total(self):
        return sum(a for a, _ in self.pairs)

    @property
    def length(self):
        return sum(b for _, b in self.pairs)

    def to_class(self):
        return from_pairs(self.pairs)


def pairs_form(pairs):
    return PairsForm(canonical_rotation(tuple((int(a), int(b)) for a, b in pairs)))


def _raw_pairs(entries):
    nonzero = [i for i, e in enumerate(entries) if e != 0]
    if not nonzero:
        raise NoNonzeroEntry("the class has no nonzero entry")
    s = len(entries)
    out = []
    for pos, i in enumerate(nonzero):
        nxt = nonzero[(pos + 1) % len(nonzero)]
        gap = (nxt - i) % s or s
        out.append((entries[i], gap))
    return out


def to_pairs(w):
    """Pairs encoding of the class `w`.

      >>> to_pairs(canonicalize([0, 0, 2, 0])).pairs
      ((2, 4),)
    """
    if not isinstance(w, CyclicVectorClass):
        w = canonicalize(w)
    return pairs_form(_raw_pairs(w.entries))


def from_pairs(pairs):
    """Inverse of `to_pairs`: each pair (a, b) contributes a followed by b-1 zeros."""
    if isinstance(pairs, PairsForm):
        pairs = pairs.pairs
    if not pairs:
        raise InvalidInput("empty pairs list")
    v = []
    for a, b in pairs:
        if a <= 0 or b <= 0:
            raise InvalidInput(f"invalid pair {(a, b)!r}")
        v.append(a)
        v.extend([0] * (b - 1))
    return canonicalize(v)


def complement(w):
    """The complement class: pairs (a_i, b_i) become (b_i, a_{i+1})."""
    if not isinstance(w, CyclicVectorClass):
        w = canonicalize(w)
    raw = _raw_pairs(w.entries)
    n = len(raw)
    return from_pairs([(raw[i][1], raw[(i + 1) % n][0]) for i in range(n)])


def _as_matrix(rows):
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or not m[0]:
        raise InvalidInput("a matrix needs at least one row and one column")
    if any(len(row) != len(m[0]) for row in m):
        raise InvalidInput("ragged matrix")
    if any(x < 0 for row in m for x in row):
        raise InvalidInput("matrix entries must be nonnegative")
    return m


def is_mint(matrix, total=None):
    """Whether `matrix` lies in Mint: every column has a positive entry (and the sum is `total`)."""
    m = _as_matrix(matrix)
    cols_ok = all(any(row[j] > 0 for row in m) for j in range(len(m[0])))
    return cols_ok and (total is None or sum(map(sum, m)) == total)


def row_major(matrix):
    return tuple(x for row in matrix for x in row)


class CyclicMatrixClass:
    """Class of an r x s matrix, compared through its row-major reading.

    The stored `matrix` is a representative; equality and hashing use
    only the shape and `row_class()`.
    """

    def __init__(self, matrix):
        self.matrix = _as_matrix(matrix)

    @property
    def rows(self):
        return len(self.matrix)

    @property
    def cols(self):
        return len(self.matrix[0])

    @property
    def total(self):
        return sum(map(sum, self.matrix))

    def row_class(self):
        return canonicalize(row_major(self.matrix))

    def is_mint(self):
        return is_mint(self.matrix)

    def _key(self):
        return (self.rows, self.cols, self.row_class())

    def __eq__(self, other):
        if not isinstance(other, CyclicMatrixClass):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"CyclicMatrixClass({[list(r) for r in self.matrix]!r})"


def row_class(matrix):
    """Row-major reading of a matrix (or matrix class) as a cyclic class."""
    if isinstance(matrix, CyclicMatrixClass):
        return matrix.row_class()
    return canonicalize(row_major(_as_matrix(matrix)))


def unflatten(w, f, r):
    """All f x r matrices in Mint whose row-major reading lies in the class `w`.

    The result is a sorted tuple of the distinct valid matrices (as
    nested tuples); as classes they all coincide, so its first element is
    the preferred printed representative.

      >>> unflatten(canonicalize([1, 1]), 1, 2)
      (((1, 1),),)
    """
    if not isinstance(w, CyclicVectorClass):
        w = canonicalize(w)
    if f < 1 or r < 1:
        raise InvalidInput("f and r must be positive")
    if w.length != f * r:
        raise InvalidInput(f"class of length {w.length} cannot fill a {f}x{r} matrix")
    found = set()
    for rot in w.rotations():
        mat = tuple(rot[k * r:(k + 1) * r] for k in range(f))
        if is_mint(mat):
            found.add(mat)
    if not found:
        raise NoValidMatrix(f"no rotation of {w} has all {r} column sums positive")
    return tuple(sorted(found))
