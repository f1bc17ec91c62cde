"""Local type <3,2,1,0,0,4,2>/12 of an L_6-embedding of rank 2, and back.

Run with ``python demos/worked_example.py``.
"""

from fractions import Fraction

from btlattice import (EmbeddingSpec, LocalType, embedding_type_from_local_type, j_e,
                       local_type_from_embedding_type, local_type_of, pearl_barycenter_offsets)

f, r = 6, 2
mu = LocalType([Fraction(e, f * r) for e in (3, 2, 1, 0, 0, 4, 2)])
cls = embedding_type_from_local_type(mu, f, r)
print("embedding type:")
for row in cls.matrix:
    print("   ", list(row))
print("row reading:", cls.row_class())

back = local_type_from_embedding_type(cls)
print("12 mu from the matrix:", back.scaled(f * r))

# the same local type, computed from coordinates of the barycenter
spec = EmbeddingSpec(cls)
point = j_e(pearl_barycenter_offsets(spec), f)
print("barycenter after j_E:", point)
print("its local type, scaled:", local_type_of(point).scaled(f * r))
