# test_simulate.py
import numpy as np
import pytest

from sasgames.config import ScheduleConfig
from sasgames.errors import StrategyError
from sasgames.game.core import build_game
from sasgames.strategies.base import MemorylessStrategy
from sasgames.strategies.simulate import sample_successor, simulate, simulate_runs
from sasgames.strategies.synth import synth_counter_strategy


@pytest.fixture
def always_b(fig1):
    return MemorylessStrategy(fig1, {0: 1, 2: 0, 3: 0})


# 1. Single runs
def test_same_seed_same_digest(fig1, always_b):
    a = simulate(fig1, always_b, seed=7, steps=500)
    b = simulate(fig1, always_b, seed=7, steps=500)
    assert a.digest == b.digest
    assert a.to_json() == b.to_json()


def test_deterministic_game_ignores_seed():
    game = build_game([("p1", 0, 1, (1,)), ("p1", 2, 0, (0, 2)), ("p1", 1, 1, (0,))])
    sigma = MemorylessStrategy(game, {0: 1, 1: 2, 2: 0})
    assert simulate(game, sigma, seed=1, steps=50).digest == simulate(game, sigma, seed=2, steps=50).digest


def test_directed_simulation(fig1, always_b):
    stats = simulate(fig1, always_b, steps=6, resolver=lambda v: 0, keep_trace=True)
    assert stats.trace == [0, 1, 0, 1, 0, 1]
    assert stats.visits1 == {1: 6}
    assert stats.visits2 == {0: 6}
    with pytest.raises(StrategyError):
        simulate(fig1, always_b, steps=6, resolver=lambda v: 3)


def test_adversary_checks(fig1, always_b):
    with pytest.raises(ValueError):
        simulate(fig1, always_b, adversary="greedy")
    with pytest.raises(StrategyError):
        simulate(fig1, always_b, adversary=MemorylessStrategy(fig1, {}))


def test_player2_machine_drives_its_vertices(fig5):
    sigma1 = MemorylessStrategy(fig5, {2: 3, 3: 3})
    spoiler = MemorylessStrategy(fig5, {0: 1, 4: 2}, player=2)
    stats = simulate(fig5, sigma1, adversary=spoiler, start=4, steps=3, keep_trace=True)
    assert stats.trace == [4, 2, 3]


def test_sampling_follows_probabilities(fig6):
    rng = np.random.default_rng(0)
    draws = [sample_successor(fig6, 1, rng) for _ in range(3000)]
    share = draws.count(fig6.successors[1][0]) / len(draws)
    assert share == pytest.approx(float(fig6.probabilities[1][0]), abs=0.05)


# 2. Counter strategies in simulation
def test_unlucky_phases_recover_quickly(fig1):
    machine = synth_counter_strategy(fig1, schedule=ScheduleConfig.parse("table:3"))
    runs = simulate_runs(fig1, machine, runs=20, seed=5, steps=200)
    assert any(stats.unlucky for stats in runs)
    for stats in runs:
        assert all(r <= fig1.n for r in stats.recovery_steps)
        assert stats.visits1.get(2, 0) > 0


def test_replicas_are_reproducible(fig1):
    machine = synth_counter_strategy(fig1)
    first = simulate_runs(fig1, machine, runs=4, seed=11, steps=300, jobs=2)
    again = simulate_runs(fig1, machine, runs=4, seed=11, steps=300, jobs=1)
    assert [s.digest for s in first] == [s.digest for s in again]
    assert len({s.seed for s in first}) == 4


@pytest.mark.slow
def test_unlucky_phases_become_rare(fig1):
    machine = synth_counter_strategy(fig1, schedule=ScheduleConfig.parse("geometric:4,2"))
    runs = simulate_runs(fig1, machine, runs=10_000, seed=42, steps=10_000, jobs=4)
    for stats in runs:
        assert all(r <= fig1.n for r in stats.recovery_steps)
    late = sum(1 for stats in runs if any(step > 5000 for step in stats.unlucky))
    assert late / len(runs) < 0.05
