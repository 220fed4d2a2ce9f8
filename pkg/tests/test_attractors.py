# test_attractors.py
import pytest

from sasgames.game.core import Owner, build_game, is_trap
from sasgames.game.generate import random_game
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.almost_sure import as_reach
from sasgames.solvers.attractors import (
    pos_attractor,
    pos_pre,
    sure_attractor,
    sure_pre,
)

SEEDS = range(40)


def ids(n, *vs):
    return VertexSet.from_ids(n, vs)


# 1. One-step predecessors
def test_sure_pre_fig1(fig1):
    assert sure_pre(fig1, 1, ids(4, 2, 3)) == ids(4, 0)


def test_pos_pre_fig1(fig1):
    assert pos_pre(fig1, 2, ids(4, 3)) == VertexSet.empty(4)
    assert pos_pre(fig1, 1, ids(4, 2)) == ids(4, 1)


@pytest.mark.parametrize("pre", [sure_pre, pos_pre])
@pytest.mark.parametrize("player", [1, 2])
def test_pre_of_empty_and_full(fig1, pre, player):
    assert pre(fig1, player, VertexSet.empty(4)) == VertexSet.empty(4)
    assert pre(fig1, player, fig1.all) == fig1.all


# 2. Attractors
def test_sure_attractor_fig1(fig1):
    attr = sure_attractor(fig1, 1, ids(4, 2, 3))
    assert attr.region == fig1.all
    assert attr.ranks == {2: 0, 3: 0, 0: 1, 1: 2}
    assert attr.strategy == {0: 3}
    assert attr.target == ids(4, 2, 3)


def test_pos_attractor_fig1(fig1):
    assert pos_attractor(fig1, 2, ids(4, 3)).region == ids(4, 3)
    assert pos_attractor(fig1, 1, fig1.all).region == fig1.all
    assert not sure_attractor(fig1, 1, VertexSet.empty(4)).region


def test_attractor_respects_arena(fig1):
    arena = ids(4, 0, 2, 3)
    attr = sure_attractor(fig1, 1, ids(4, 2), arena=arena)
    assert attr.region <= arena
    assert 1 not in attr.region


@pytest.mark.parametrize("seed", SEEDS)
def test_attractor_properties(seed):
    game = random_game(seed, 6)
    target = VertexSet.from_ids(6, [seed % 6])
    for player in (1, 2):
        sure = sure_attractor(game, player, target)
        pos = pos_attractor(game, player, target)
        assert target <= sure.region <= pos.region
        assert sure_attractor(game, player, sure.region).region == sure.region
        assert is_trap(game, player, game.all - pos.region)


@pytest.mark.parametrize("seed", SEEDS)
def test_sure_attractor_ranks_decrease(seed):
    game = random_game(seed, 6)
    target = VertexSet.from_ids(6, [0, seed % 6])
    owner = Owner.P1
    attr = sure_attractor(game, 1, target)
    for v in attr.region - target:
        rank = attr.ranks[v]
        if game.owners[v] is owner:
            assert attr.ranks[attr.strategy[v]] < rank
        else:
            assert all(attr.ranks[u] < rank for u in game.successors[v])
        assert rank <= game.n


# 3. Almost-sure reachability
def test_as_reach_trivial_targets(fig1):
    assert as_reach(fig1, 1, fig1.all).region == fig1.all
    assert as_reach(fig1, 2, VertexSet.empty(4)).region == VertexSet.empty(4)


def test_as_reach_markov_chain():
    chain = build_game(
        [
            ("rand", 1, 0, [(0, "1/2"), (1, "1/2")]),
            ("rand", 2, 0, [(1, 1)]),
        ]
    )
    assert as_reach(chain, 1, ids(2, 1)).region == chain.all


def test_as_reach_needs_probability_one():
    # Player 2 at vertex 2 can stay away from the target forever
    game = build_game(
        [
            ("rand", 0, 0, [(1, "1/2"), (2, "1/2")]),
            ("p1", 0, 0, (1,)),
            ("p2", 0, 0, (1, 2)),
        ]
    )
    target = ids(3, 1)
    assert pos_attractor(game, 1, target).region == ids(3, 0, 1)
    assert as_reach(game, 1, target).region == ids(3, 1)
