"""JSON encodings of the library objects.

Rationals are written as strings ``"p/q"`` in lowest terms (``"p"`` when
integral) so no value ever passes through a float, and `dumps` sorts
keys so that equal objects produce byte-identical output.
"""

import json

from ._rational import as_fraction, fmt
from .cyclic import CyclicMatrixClass, CyclicVectorClass, canonicalize
from .embedding import LocalType
from .errors import InvalidInput
from .filtration import SquareFiltration
from .hermitian import HermitianFrame
from .latticefn import AmbientFrame, LatticeChain, SplitLattice, SplitLatticeFunction


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def encode(obj):
    if isinstance(obj, CyclicVectorClass):
        return {"entries": list(obj.entries)}
    if isinstance(obj, CyclicMatrixClass):
        return {"matrix": [list(r) for r in obj.matrix], "row": list(obj.row_class().entries)}
    if isinstance(obj, SplitLatticeFunction):
        return {"m": obj.m, "d": obj.d, "offsets": [fmt(a) for a in obj.offsets]}
    if isinstance(obj, SplitLattice):
        return {"m": obj.frame.m, "d": obj.frame.d, "exponents": list(obj.exponents)}
    if isinstance(obj, LatticeChain):
        return {"rank": obj.rank, "lattices": [list(x.exponents) for x in obj.lattices]}
    if isinstance(obj, HermitianFrame):
        return {"epsilon": obj.epsilon, "kind": obj.kind, "tau": list(obj.tau),
                "gramVal": [fmt(v) for v in obj.gram_val], "d": obj.d}
    if isinstance(obj, LocalType):
        return {"weights": [fmt(w) for w in obj.weights]}
    if isinstance(obj, SquareFiltration):
        return {"m": obj.frame.m, "d": obj.frame.d,
                "diff": [[None if x is None else fmt(x) for x in row] for row in obj.diff]}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _require(data, *keys):
    if not isinstance(data, dict):
        raise InvalidInput("expected a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InvalidInput(f"missing field(s): {', '.join(missing)}")


def _int(value, name):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidInput(f"field {name!r} must be an integer")
    return value


def _rational(value, name):
    if isinstance(value, float):
        raise InvalidInput(f"field {name!r} must be an exact rational string, not a float")
    return as_fraction(value)


def decode_class(data):
    _require(data, "entries")
    entries = data["entries"]
    if not isinstance(entries, list):
        raise InvalidInput("entries must be a list")
    return canonicalize([_int(e, "entries") for e in entries])


def decode_matrix(data):
    if isinstance(data, dict):
        _require(data, "matrix")
        data = data["matrix"]
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise InvalidInput("a matrix is a list of lists")
    return CyclicMatrixClass([[_int(x, "matrix") for x in row] for row in data])


def decode_lattice_function(data):
    _require(data, "offsets")
    offsets = data["offsets"]
    if not isinstance(offsets, list):
        raise InvalidInput("offsets must be a list")
    offsets = [_rational(a, "offsets") for a in offsets]
    m = _int(data.get("m", len(offsets)), "m")
    d = _int(data.get("d", 1), "d")
    return SplitLatticeFunction(AmbientFrame(m, d), offsets)


def decode_frame(data, d=1):
    _require(data, "epsilon", "tau", "gramVal")
    tau = data["tau"]
    vals = data["gramVal"]
    if not isinstance(tau, list) or not isinstance(vals, list):
        raise InvalidInput("tau and gramVal must be lists")
    d = _int(data.get("d", d), "d")
    return HermitianFrame(AmbientFrame(len(tau), d), _int(data["epsilon"], "epsilon"),
                          data.get("kind", "first"), [_int(i, "tau") for i in tau],
                          [_rational(v, "gramVal") for v in vals])


def decode_local_type(data):
    if isinstance(data, dict):
        _require(data, "weights")
        data = data["weights"]
    if not isinstance(data, list):
        raise InvalidInput("a local type is a list of rationals")
    return LocalType([_rational(w, "mu") for w in data])
