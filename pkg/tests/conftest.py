import pytest

from bennequin.diagram import parse_braid
from bennequin.resolution import ResolvedGraph, all_graphs


@pytest.fixture
def trefoil():
    return parse_braid("2: 1 1 1")


@pytest.fixture
def figure_eight():
    return parse_braid("3: 1 -2 1 -2")


SMALL_GRAPHS = list(all_graphs(3, 3)) + [ResolvedGraph(0)]
