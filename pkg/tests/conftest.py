import pytest

from ybe_garside.perms import parse_permutation
from ybe_garside.permsol import PermutationSolution
from ybe_garside.solution import Solution


@pytest.fixture(scope="session")
def fivegen() -> Solution:
    """Five generators: two commuting 4-cycles define the first four maps,
    the fifth map is the identity.  Involutive, braided, not square-free,
    decomposable as {x1..x4} | {x5}."""
    n = 5
    c = parse_permutation("(1,2,3,4)(5)", n)
    cinv = parse_permutation("(1,4,3,2)(5)", n)
    e = parse_permutation("(1)", n)
    g = (c, cinv, c, cinv, e)
    return Solution(n, g, g)


@pytest.fixture(scope="session")
def cyclic3() -> Solution:
    """Three generators with S(i, j) = (c(j), c^-1(i)) for the 3-cycle c:
    indecomposable, braided and involutive, but not square-free."""
    n = 3
    c = parse_permutation("(1,2,3)", n)
    cinv = parse_permutation("(1,3,2)", n)
    return Solution(n, (c,) * n, (cinv,) * n)


@pytest.fixture(scope="session")
def perm5() -> PermutationSolution:
    """Non-involutive braided permutation solution on five generators:
    f = (1,4)(2,3), g = (1,2)(3,4), so fg = gf = (1,3)(2,4) but fg != id."""
    n = 5
    return PermutationSolution(
        n,
        parse_permutation("(1,4)(2,3)", n),
        parse_permutation("(1,2)(3,4)", n),
    )
