import pytest
import random

from fractions import Fraction

from toricsplit.bundle.bundledata import cp2_rank2, dual_bundle, tangent_bundle
from toricsplit.common.errors import BundleDataError, DimensionMismatchError, SingularMatrixError
from toricsplit.linear.rational import rational_rank
from toricsplit.splitting.bootstrap import bootstrap
from toricsplit.splitting.oracle import h0_oracle, monomial, section_count, transition_matrix
from toricsplit.splitting.restriction import default_v_sigma1, restrict, tau_perp, weight_difference_total
from toricsplit.splitting.system import restriction_degrees, splitting_system, twisted_by_class
from toricsplit.toric.fan import pairing, projective_space_fan, walls
from toricsplit.toric.intersection import augmented_matrix
from toricsplit.toric.surfacegraph import graph_to_fan, hirzebruch
from toricsplit.model.types import WeightedCircularGraph


def test_bootstrap_example():

    assert bootstrap((1, 0), (0, 1), [[1, 1], [0, 1]]) == (1, -1)


def test_bootstrap_diagonal():

    assert bootstrap((3, 0, 1), (1, 0, 2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (2, 0, -1)


def test_bootstrap_errors():

    with pytest.raises(SingularMatrixError):
        bootstrap((1, 0), (0, 1), [[1, 1], [1, 1]])

    with pytest.raises(DimensionMismatchError):
        bootstrap((1, 0), (0,), [[1, 0], [0, 1]])


def test_oracle():

    transition = [[monomial(1, 2), {}], [{}, monomial(1, -1)]]
    assert h0_oracle(transition) == (2, -1)

    assert h0_oracle(transition_matrix((1, 0), (0, 1), [[1, 1], [0, 1]])) == (1, -1)

    # h0(O(2) + O(-1)) = 3
    assert section_count(transition, 0, 4) == 3


def test_oracle_with_wide_inverse():

    chart1, chart2 = (0, 2, -1), (1, 1, -1)
    pasting = [[0, -1, 2], [0, 0, 2], [1, 1, 0]]
    transition = transition_matrix(chart1, chart2, pasting)

    # h0 of O(1) + O(1) + O(-2) twisted by -4 … 4
    assert [section_count(transition, k, 30) for k in range(-4, 5)] == [0, 0, 0, 2, 4, 6, 9, 12, 15]

    assert h0_oracle(transition, max_retries=0) == (1, 1, -2)
    assert bootstrap(chart1, chart2, pasting) == (1, 1, -2)


def test_bootstrap_agrees_with_oracle():

    rng = random.Random(4242)
    cases = 0
    while cases < 500:
        rank = rng.randint(1, 3)
        chart1 = tuple(rng.randint(-1, 2) for _ in range(rank))
        chart2 = tuple(rng.randint(-1, 2) for _ in range(rank))
        pasting = [[Fraction(rng.randint(-2, 2)) for _ in range(rank)] for _ in range(rank)]
        if rational_rank(pasting, rank) != rank:
            continue

        expected = h0_oracle(transition_matrix(chart1, chart2, pasting))
        assert bootstrap(chart1, chart2, pasting) == expected, (chart1, chart2, pasting)
        assert sum(expected) == sum(chart1) - sum(chart2)

        cases += 1


def test_tangent_restriction():

    fan = projective_space_fan(2)
    data = tangent_bundle(fan)

    for wall in walls(fan):
        perp = tau_perp(fan, wall)
        assert all(pairing(perp, fan.rays[k]) == 0 for k in wall.tau)
        assert pairing(perp, default_v_sigma1(fan, wall)) == 1

        restriction = restrict(data, wall)
        assert restriction_degrees(restriction) == (2, 1)
        assert weight_difference_total(restriction) == 3


def test_restriction_rejects_bad_vector():

    fan = projective_space_fan(2)
    wall = walls(fan)[0]

    with pytest.raises(BundleDataError):
        restrict(tangent_bundle(fan), wall, (0, 0))


def test_restriction_vector_choice_is_irrelevant():

    for fan in [projective_space_fan(3), graph_to_fan(hirzebruch(2)), graph_to_fan(WeightedCircularGraph((-1, -2, -1, -2, -1, -2, -1, -2)))]:
        data = tangent_bundle(fan)
        for wall in walls(fan):
            base = default_v_sigma1(fan, wall)
            expected = restriction_degrees(restrict(data, wall))

            # moving along the rays of the wall keeps the pairing with τ^⊥
            for t in (-2, 1, 3):
                v = list(base)
                for k in wall.tau:
                    v = [x + t * y for x, y in zip(v, fan.rays[k])]

                assert restriction_degrees(restrict(data, wall, v)) == expected


@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_tangent_projective_space(n):

    xi = splitting_system(tangent_bundle(projective_space_fan(n)))
    assert set(xi.tuples) == {(2,) + (1,) * (n - 1)}


def test_tangent_of_surface_is_weight_system():

    g = WeightedCircularGraph((-1, -2, -2, -1, -2, -2, -1, -2, -2))
    xi = splitting_system(tangent_bundle(graph_to_fan(g)))

    assert xi.tuples == tuple((2, a) for a in g.weights)


def test_cotangent():

    xi = splitting_system(dual_bundle(tangent_bundle(projective_space_fan(2))))
    assert xi.tuples == ((-1, -2),) * 3


@pytest.mark.parametrize('a,b,c', [(1, 1, 1), (2, 1, 1), (1, 3, 2), (3, 1, 4)])
def test_rank2_on_projective_plane(a, b, c):

    data = cp2_rank2(a, b, c)
    xi = splitting_system(data)

    expected = [tuple(sorted(p, reverse=True)) for p in [(a + c, b), (a + b, c), (b + c, a)]]
    assert sorted(xi.tuples) == sorted(expected)

    for wall in walls(data.fan):
        restriction = restrict(data, wall)
        assert sum(restriction_degrees(restriction)) == weight_difference_total(restriction)


def test_splitting_system_is_deterministic_across_workers():

    data = tangent_bundle(graph_to_fan(WeightedCircularGraph((-1, -3) * 6)))
    assert splitting_system(data, workers=1) == splitting_system(data, workers=4)


def test_twisted_by_class():

    fan = projective_space_fan(2)
    q = augmented_matrix(fan)
    xi = splitting_system(cp2_rank2(1, 1, 1))

    assert twisted_by_class(xi, q, (0, 3, 0)).tuples == ((5, 4),) * 3

    with pytest.raises(DimensionMismatchError):
        twisted_by_class(xi, augmented_matrix(graph_to_fan(hirzebruch(0))), (0, 0, 0, 0))
