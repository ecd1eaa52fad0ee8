import pytest

from toricsplit.bundle.bundledata import tangent_bundle, validate
from toricsplit.common.errors import GraphError
from toricsplit.model.types import WeightedCircularGraph
from toricsplit.splitting.restriction import restrict, weight_difference_total
from toricsplit.splitting.system import restriction_degrees
from toricsplit.toric.fan import walls
from toricsplit.toric.intersection import augmented_matrix
from toricsplit.toric.surfacegraph import blowup, canonical_form, cp2, enumerate_blowups, graph_to_fan, hirzebruch


def graph(*weights):
    return WeightedCircularGraph(tuple(weights))


def assert_tangent_bundle_consistent(g):
    fan = graph_to_fan(g)
    data = tangent_bundle(fan)
    assert validate(data) == []

    for wall in walls(fan):
        restriction = restrict(data, wall)
        assert sum(restriction_degrees(restriction)) == weight_difference_total(restriction)


def test_blowup():

    assert blowup(cp2(), 1) == graph(0, -1, 0, 1)

    # blowing up between the last and the first vertex appends the new vertex
    assert blowup(graph(0, -1, 0, 1), 4) == graph(-1, -1, 0, 0, -1)

    with pytest.raises(GraphError):
        blowup(cp2(), 4)


def test_canonical_form():

    assert canonical_form(graph(0, -1, 0, 1)) == graph(-1, 0, 1, 0)
    assert canonical_form(graph(1, 0, -1, 0)) == graph(-1, 0, 1, 0)
    assert canonical_form(graph(-1, -1, 1, 0, -2)) == graph(-2, -1, -1, 1, 0)


def test_enumerate_small():

    assert enumerate_blowups(0) == [cp2()]
    assert enumerate_blowups(1) == [graph(-1, 0, 1, 0)]
    assert enumerate_blowups(2) == [graph(-2, -1, -1, 1, 0), graph(-1, -1, -1, 0, 0)]

    assert graph(-1, -1, -1, -1, -1, -1) in enumerate_blowups(3)


def test_enumerate_is_deterministic_across_workers():

    assert enumerate_blowups(5, workers=1) == enumerate_blowups(5, workers=4)


@pytest.mark.parametrize('k', range(0, 7))
def test_enumerated_graphs_are_surfaces(k):

    for g in enumerate_blowups(k, workers=1):
        assert g.size == k + 3
        assert sum(g.weights) == 12 - 3 * g.size
        assert canonical_form(g) == g

        # the diagonal of Q carries the weights
        q = augmented_matrix(graph_to_fan(g)).q
        assert tuple(q[i, i] for i in range(g.size)) == g.weights

        if k <= 3:
            assert_tangent_bundle_consistent(g)


@pytest.mark.slow
def test_enumerated_graphs_up_to_nine_blowups():

    for k in range(7, 10):
        graphs = enumerate_blowups(k)
        assert len(graphs) == len(set(graphs))

        for g in graphs:
            assert sum(g.weights) == 12 - 3 * g.size
            assert_tangent_bundle_consistent(g)


def test_hirzebruch_fan():

    for a in range(0, 5):
        fan = graph_to_fan(hirzebruch(a))
        assert fan.rays == ((1, 0), (0, 1), (-1, -a), (0, -1))

        q = augmented_matrix(fan).q
        assert q.to_lists() == [[0, 1, 0, 1], [1, a, 1, 0], [0, 1, 0, 1], [1, 0, 1, -a]]

    with pytest.raises(GraphError):
        hirzebruch(-1)


def test_graph_to_fan_errors():

    with pytest.raises(GraphError, match='inconsistent weight sequence'):
        graph_to_fan(graph(1, 1, 2))

    with pytest.raises(GraphError, match='at least 3'):
        graph_to_fan(graph(0, 0))

    # right weight sum, but the rays do not close up
    with pytest.raises(GraphError, match='close'):
        graph_to_fan(graph(1, -1, 1, -1))
