import pytest

from graphburn.graph import Graph


def path_rooted(n, root=0):
    from graphburn.gen import gen_path
    from graphburn.graph import RootedTree

    return RootedTree(gen_path(n), root)


@pytest.fixture
def k5():
    from graphburn.gen import gen_complete

    return gen_complete(5)


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
