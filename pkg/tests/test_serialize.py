import json
from fractions import Fraction as Q

import pytest

from btlattice.cyclic import CyclicMatrixClass, canonicalize
from btlattice.embedding import LocalType
from btlattice.errors import InvalidInput
from btlattice.filtration import square_of
from btlattice.hermitian import HermitianFrame
from btlattice.latticefn import SplitLatticeFunction, to_chain
from btlattice.serialize import (decode_class, decode_frame, decode_lattice_function,
                                 decode_local_type, decode_matrix, dumps, encode)


def test_rationals_are_strings_in_lowest_terms():
    lam = SplitLatticeFunction.of([Q(2, 4), 3, Q(-1, 3)], 2)
    assert encode(lam) == {"m": 3, "d": 2, "offsets": ["1/2", "3", "-1/3"]}


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, "1/2"]}) == '{"a":[1,"1/2"],"b":1}'


def test_round_trips():
    lam = SplitLatticeFunction.of(["1/3", "-5/6"], 2)
    assert decode_lattice_function(json.loads(dumps(encode(lam)))) == lam
    w = canonicalize([0, 2, 1])
    assert decode_class(encode(w)) == w
    cls = CyclicMatrixClass([[1, 0], [1, 3]])
    assert decode_matrix(encode(cls)) == cls
    H = HermitianFrame.hyperbolic(1, epsilon=-1, d=2, anisotropic=("1/2",))
    assert decode_frame(encode(H)) == H
    mu = LocalType([Q(1, 4), Q(3, 4)])
    assert decode_local_type(encode(mu)) == mu


def test_encode_chain_and_filtration():
    lam = SplitLatticeFunction.of([0, "1/2"])
    assert encode(to_chain(lam)) == {"rank": 2, "lattices": [[0, 0], [1, 0]]}
    assert encode(square_of(lam))["diff"] == [["0", "-1/2"], ["1/2", "0"]]


def test_floats_are_rejected():
    with pytest.raises(InvalidInput):
        decode_lattice_function({"offsets": [0.5]})
    with pytest.raises(InvalidInput):
        decode_local_type([0.5, 0.5])


def test_schema_errors():
    with pytest.raises(InvalidInput):
        decode_lattice_function({"m": 2})
    with pytest.raises(InvalidInput):
        decode_matrix([[1, "x"]])
    with pytest.raises(InvalidInput):
        decode_class({"entries": "123"})
    with pytest.raises(InvalidInput):
        decode_frame({"epsilon": 1, "tau": [0]})


def test_unknown_objects():
    with pytest.raises(TypeError):
        encode(object())
