import pytest
import random

from itertools import permutations, product

from toricsplit.bundle.bundledata import cp2_rank2, tangent_bundle
from toricsplit.linear.hermite import solve_integral
from toricsplit.linear.intmatrix import IntMatrix
from toricsplit.model.types import DivisorSign, SplittingSystem, WeightedCircularGraph
from toricsplit.toric.classes import canonical_class_rep
from toricsplit.solver.splittingsolver import SplittingTypeSolver, find_splitting_types
from toricsplit.splitting.system import splitting_system, twisted_by_class
from toricsplit.toric.fan import projective_space_fan
from toricsplit.toric.intersection import augmented_matrix, principal_divisor_columns, sign_of_degrees
from toricsplit.toric.surfacegraph import cp2, enumerate_blowups, graph_to_fan, hirzebruch


def canonical_keys(types):
    return {tuple(sorted(t.canonical, reverse=True)) for t in types}


def test_projective_plane_tangent():

    q = augmented_matrix(projective_space_fan(2))
    types = find_splitting_types(q, SplittingSystem(((2, 1),) * 3))

    assert len(types) == 1
    assert types[0].canonical == ((2, 0, 0), (1, 0, 0))
    assert types[0].sign_classes == (DivisorSign.POSITIVE, DivisorSign.POSITIVE)


def test_hexagon_tangent():

    fan = graph_to_fan(WeightedCircularGraph((-1,) * 6))
    q = augmented_matrix(fan)
    types = find_splitting_types(q, SplittingSystem(((2, -1),) * 6))

    assert len(types) == 1
    assert types[0].canonical == ((2, 4, 4, 2, 0, 0), (-1, -2, -2, -1, 0, 0))
    assert q.q.apply(types[0].columns[0]) == (2,) * 6
    assert q.q.apply(types[0].columns[1]) == (-1,) * 6


def test_hirzebruch_zero_sign_rules():

    fan = graph_to_fan(hirzebruch(0))
    q = augmented_matrix(fan)
    xi = splitting_system(tangent_bundle(fan))

    assert canonical_keys(find_splitting_types(q, xi)) == {
        ((2, 2, 0, 0), (0, 0, 0, 0)),
        ((2, 0, 0, 0), (0, 2, 0, 0))
    }

    strict = find_splitting_types(q, xi, strict=True)
    assert len(strict) == 1
    assert strict[0].canonical == ((2, 2, 0, 0), (0, 0, 0, 0))
    assert strict[0].sign_classes == (DivisorSign.POSITIVE, DivisorSign.ZERO)


@pytest.mark.parametrize('a', [1, 2, 3])
def test_hirzebruch_without_type(a):

    fan = graph_to_fan(hirzebruch(a))
    xi = splitting_system(tangent_bundle(fan))

    assert find_splitting_types(augmented_matrix(fan), xi) == []


def test_unequal_rank2_has_no_type():

    q = augmented_matrix(projective_space_fan(2))
    assert find_splitting_types(q, splitting_system(cp2_rank2(2, 1, 1))) == []


def test_solutions_are_sound():

    for g in enumerate_blowups(3, workers=1):
        fan = graph_to_fan(g)
        q = augmented_matrix(fan)
        for t in find_splitting_types(q, splitting_system(tangent_bundle(fan), workers=1)):
            for column, target, sign in zip(t.columns, t.r_prime.columns(), t.sign_classes):
                assert q.q.apply(column) == target
                assert sign == sign_of_degrees(target)
                assert sign != DivisorSign.MIXED


def test_canonical_form_ignores_principal_shift():

    fan = graph_to_fan(hirzebruch(1))
    x = (3, -1, 2, 5)
    for column in principal_divisor_columns(fan):
        shifted = tuple(a - 2 * b for a, b in zip(x, column))
        assert canonical_class_rep(shifted, fan) == canonical_class_rep(x, fan)


def test_twist_shifts_every_column():

    fan = graph_to_fan(hirzebruch(0))
    q = augmented_matrix(fan)
    xi = splitting_system(tangent_bundle(fan))

    x0 = (1, 1, 0, 0)
    shifted = {
        tuple(sorted((tuple(a + b for a, b in zip(c, canonical_class_rep(x0, fan))) for c in key), reverse=True))
        for key in canonical_keys(find_splitting_types(q, xi))
    }

    assert canonical_keys(find_splitting_types(q, twisted_by_class(xi, q, x0))) == shifted


def brute_force_keys(q, xi, strict):
    fan = q.fan
    keys = set()

    orderings = [set(permutations(t)) for t in xi.tuples]
    for rows in product(*orderings):
        columns = list(zip(*rows))

        signs = [sign_of_degrees(c) for c in columns]
        if strict and any(s == DivisorSign.NEF for s in signs):
            continue

        if any(s == DivisorSign.MIXED for s in signs):
            continue

        solution = solve_integral(q.q, IntMatrix.from_rows(rows))
        if solution is None:
            continue

        keys.add(tuple(sorted((canonical_class_rep(c, fan) for c in solution.solution.columns()), reverse=True)))

    return keys


@pytest.mark.parametrize('strict', [False, True])
def test_pruned_search_matches_brute_force(strict):

    rng = random.Random(7)
    graphs = [cp2(), hirzebruch(0), hirzebruch(1), hirzebruch(2)] + enumerate_blowups(2, workers=1) + enumerate_blowups(3, workers=1)

    for g in graphs:
        fan = graph_to_fan(g)
        q = augmented_matrix(fan)
        solver = SplittingTypeSolver(q, strict)

        for _ in range(6):

            # half of the systems come from actual classes, the rest is noise
            if rng.random() < 0.5:
                x1 = [rng.randint(-2, 2) for _ in range(fan.num_rays)]
                x2 = [rng.randint(-2, 2) for _ in range(fan.num_rays)]
                tuples = tuple(tuple(sorted(p, reverse=True)) for p in zip(q.q.apply(x1), q.q.apply(x2)))
            else:
                tuples = tuple(tuple(sorted((rng.randint(-2, 3), rng.randint(-2, 3)), reverse=True)) for _ in range(fan.num_rays))

            xi = SplittingSystem(tuples)
            assert canonical_keys(solver.find(xi)) == brute_force_keys(q, xi, strict)
