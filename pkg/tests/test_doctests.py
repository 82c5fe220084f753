import doctest

import pytest

from schubcalc import complexes, perms, pipedreams, poly, shapes, shuffles


@pytest.mark.parametrize("module", [perms, shapes, pipedreams, poly, complexes,
                                    shuffles])
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
