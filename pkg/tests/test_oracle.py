import pytest

from k5minus.graphs import Graph
from k5minus.oracle import TooLarge, oracle_contains
from k5minus.patterns import K5, K5_MINUS, W4, Pattern


def complete(n):
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def wheel(n):
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return Graph(n + 1, [(0, 1 + i) for i in range(n)] + rim)


def octahedron():
    non = {(0, 1), (2, 3), (4, 5)}
    return Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6) if (a, b) not in non])


def test_k5_contains_everything_small():
    assert oracle_contains(complete(5), K5)
    assert oracle_contains(complete(5), K5_MINUS)
    assert oracle_contains(complete(5), W4)


def test_petersen_no_k5_minus():
    # cubic graph: no vertex can host a degree-4 branch vertex
    assert not oracle_contains(petersen(), K5_MINUS)


def test_w5_graph_no_k5_minus():
    # only the hub has degree >= 4
    assert not oracle_contains(wheel(5), K5_MINUS)


def test_octahedron_contains_k5_minus():
    assert oracle_contains(octahedron(), K5_MINUS)


def test_subdivided_k5_minus_detected():
    # K5- with every edge subdivided once: branch vertices 0..4, midpoints 5..13
    edges = []
    mid = 5
    for a in range(5):
        for b in range(a + 1, 5):
            if (a, b) == (3, 4):
                continue
            edges.extend([(a, mid), (mid, b)])
            mid += 1
    g = Graph(mid, edges)
    assert oracle_contains(g, K5_MINUS)
    assert not oracle_contains(g, K5)


def test_exactness_rejects_near_miss():
    # K5 minus two edges has the K5- degree profile nowhere
    g = Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5)
                  if (a, b) not in [(3, 4), (1, 2)]])
    assert not oracle_contains(g, K5_MINUS)


def test_guard_over_25_edges():
    with pytest.raises(TooLarge):
        oracle_contains(complete(8), K5_MINUS)


def test_min_degree_3_required():
    with pytest.raises(ValueError):
        oracle_contains(complete(5), Pattern(2, ((0, 1),)))
