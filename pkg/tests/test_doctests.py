import doctest

import pytest

from qcrystal import (cli, engine, factorization, kraskiewicz, mixed, models,
                      ptops, tableaux, typeb, verify, words)

MODULES = [cli, engine, factorization, kraskiewicz, mixed, models,
           ptops, tableaux, typeb, verify, words]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
