import doctest
import importlib

import pytest

MODULES = ["_rational", "cyclic", "latticefn", "hermitian", "filtration", "descent", "embedding",
           "oracle", "serialize", "verify", "cli"]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    mod = importlib.import_module(f"btlattice.{name}")
    result = doctest.testmod(mod, optionflags=doctest.ELLIPSIS)
    assert result.failed == 0
