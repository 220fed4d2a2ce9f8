# test_solvers.py
import pytest

from sasgames.errors import PreconditionError
from sasgames.game.core import build_game, derandomize
from sasgames.game.generate import random_game
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.solvers.graph import (
    is_nontrivial,
    reachable,
    shortest_path,
    strongly_connected_components,
)
from sasgames.solvers.mdp import (
    controller,
    mdp_as_parity,
    mdp_pos_parity,
    mec_decomposition,
)
from sasgames.solvers.zielonka import solve_parity_zielonka

SEEDS = range(40)


def ids(n, *vs):
    return VertexSet.from_ids(n, vs)


# 1. Graph helpers
def test_strongly_connected_components():
    successors = [(1,), (0, 2), (2,), (2,)]
    assert strongly_connected_components(successors) == [[0, 1], [2], [3]]
    assert strongly_connected_components(successors, [0, 2]) == [[0], [2]]
    assert is_nontrivial([2], successors)
    assert not is_nontrivial([3], successors)


def test_reachability_helpers():
    successors = [(1,), (2,), (2,), (0,)]
    assert reachable(successors, [0]) == [0, 1, 2]
    assert shortest_path(successors, 3, [2]) == [3, 0, 1, 2]
    assert shortest_path(successors, 2, [0]) is None


# 2. Zielonka
@pytest.mark.parametrize("priority, winner", [(0, 1), (1, 2), (4, 1), (3, 2)])
def test_zielonka_single_vertex(priority, winner):
    game = build_game([("p1", priority, 0, (0,))])
    result = solve_parity_zielonka(game)
    assert result.region(winner) == game.all


def test_zielonka_rejects_random_vertices(fig1):
    with pytest.raises(PreconditionError):
        solve_parity_zielonka(fig1)


@pytest.mark.parametrize("seed", SEEDS)
def test_zielonka_partition_and_strategies(seed):
    game = derandomize(random_game(seed, 7))
    result = solve_parity_zielonka(game)
    assert result.w1 | result.w2 == game.all
    assert result.w1.isdisjoint(result.w2)
    for player, region in ((1, result.w1), (2, result.w2)):
        for v, u in result.strategy(player).items():
            assert v in region and u in region
            assert u in game.successors[v]


@pytest.mark.parametrize("seed", SEEDS)
def test_almost_sure_agrees_with_zielonka_without_randomness(seed):
    game = derandomize(random_game(seed, 7))
    assert solve_as_parity(game).region == solve_parity_zielonka(game).w1


# 3. Almost-sure parity
def test_almost_sure_all_even():
    game = random_game(3, 6, d1=0).with_priorities(omega1=(0, 2, 4, 0, 2, 2))
    assert solve_as_parity(game).region == game.all


def test_almost_sure_fig1_second_priority(fig1):
    result = solve_as_parity(fig1, fig1.omega2)
    assert result.region == fig1.all
    assert result.strategy[0] == 1


@pytest.mark.parametrize("seed", SEEDS)
def test_almost_sure_strategy_stays_in_region(seed):
    game = random_game(seed, 7)
    result = solve_as_parity(game)
    for v in result.region:
        if game.is_player(v, 1):
            assert result.strategy[v] in result.region
        elif game.is_player(v, 2) or game.probabilities[v] is not None:
            assert all(u in result.region for u in game.successors[v])


# 4. MDPs
def test_controller(fig1):
    assert controller(fig1) == 1
    assert controller(random_game(0, 4, random_fraction=1.0)) is None
    mixed = build_game([("p1", 0, 0, (1,)), ("p2", 0, 0, (0,))])
    with pytest.raises(PreconditionError):
        controller(mixed)


def test_mec_of_strongly_connected_mdp():
    game = build_game([("p1", 0, 0, (1,)), ("p1", 0, 0, (0,))])
    assert mec_decomposition(game) == [game.all]


def test_mec_terminal_loops():
    game = build_game(
        [("p1", 0, 0, (1, 2)), ("p1", 0, 0, (1,)), ("p1", 0, 0, (2,))]
    )
    assert mec_decomposition(game) == [ids(3, 1), ids(3, 2)]


def test_mdp_parity_with_odd_sink():
    game = build_game([("p1", 0, 0, (0, 1)), ("p1", 1, 0, (1,))])
    assert mdp_as_parity(game) == ids(2, 0)
    assert mdp_pos_parity(game) == ids(2, 0)
    even = game.with_priorities(omega1=(0, 2))
    assert mdp_as_parity(even) == even.all
    assert mdp_pos_parity(even) == even.all


def test_markov_chain_positive_but_not_almost_sure():
    chain = build_game(
        [
            ("rand", 0, 0, [(1, "1/2"), (2, "1/2")]),
            ("rand", 2, 0, [(1, 1)]),
            ("rand", 1, 0, [(2, 1)]),
        ]
    )
    assert mdp_pos_parity(chain) == ids(3, 0, 1)
    assert mdp_as_parity(chain) == ids(3, 1)


@pytest.mark.parametrize("seed", SEEDS)
def test_mdp_agrees_with_game_solver(seed):
    game = random_game(seed, 7, p2_fraction=0.0)
    assert mdp_as_parity(game) == solve_as_parity(game).region
