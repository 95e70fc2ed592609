import pytest

from resposet import structfile, structure, synthesize_residuum
from resposet.order import poset_from_covers


@pytest.fixture(scope="session")
def example1():
    return structfile.load("example1").structure


@pytest.fixture(scope="session")
def chain3():
    return structfile.load("chain3").structure


@pytest.fixture(scope="session")
def diamond():
    """Heyting algebra on the diamond 0 < x,y < 1 (meet as product).

    The carrier member (x,y) of the twist restricted around x is
    incomparable with (x,x), so the comparability assumption fails here.
    """
    p = poset_from_covers(("0", "x", "y", "1"),
                          ((0, 1), (0, 2), (1, 3), (2, 3)))
    mul = ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3))
    syn = synthesize_residuum(p, mul)
    assert syn.ok
    return structure(p, mul=mul, imp=syn.imp, one=3, zero=0)


@pytest.fixture(scope="session")
def bool2():
    """Two-element Boolean structure: x*y is min, x->y is 1-x+xy."""
    p = poset_from_covers(("0", "1"), ((0, 1),))
    return structure(p, mul=((0, 0), (0, 1)), imp=((1, 1), (0, 1)),
                     one=1, zero=0)
