"""Exact lattice-function model of Bruhat-Tits buildings.

Points of an apartment of the building of GL_m(D) are split lattice
functions, recorded by rational offset vectors.  On top of those the
package provides hermitian duality and self-dual points, square lattice
functions and their skew parts, the descent map j_E for unramified
embeddings, hereditary-order invariants, and the correspondence between
local types and embedding types.
"""

from .cyclic import (CyclicMatrixClass, CyclicVectorClass, PairsForm, canonicalize, complement,
                     from_pairs, row_class, to_pairs, unflatten)
from .descent import (DescentContext, NotUnique, image_characterization, j_e, j_e_inverse,
                      unique_extension, unitary_descend)
from .embedding import (EmbeddingSpec, LocalType, OrientedChamberFrame, chamber_frame,
                        embedding_type_from_local_type, local_type_from_embedding_type,
                        local_type_of, pearl_barycenter_offsets, verify_main_theorem)
from .errors import (BTLatticeError, FrameMismatch, InconsistentData, InvalidDegree, InvalidGrid,
                     InvalidInput, NoNonzeroEntry, NotIntegral, NoValidMatrix)
from .filtration import (CentralizerSpec, Factor, SkewFiltrationData, SquareFiltration,
                         Undetermined, clf_holds, entry_exponent, intersect_blocks,
                         recover_differences, skew_data, square_of)
from .hermitian import (HermitianFrame, bary, dual_in_complement, dual_norm, hyperbolic_extend,
                        is_dominated, is_self_dual)
from .latticefn import (AmbientFrame, LatticeChain, LatticeFunctionClass, SplitLattice,
                        SplitLatticeFunction, affine_combine, direct_sum, evaluate, invariant,
                        lattice_class, monomial_act, rank, to_chain, translate)

__version__ = "0.1.0"
