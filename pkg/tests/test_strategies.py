# test_strategies.py
import itertools

import pytest

from sasgames.config import ScheduleConfig
from sasgames.defaults import get_default_schedule
from sasgames.errors import BoundExceededError, PreconditionError, StrategyError
from sasgames.game.core import build_game, fix_strategy
from sasgames.game.generate import random_game
from sasgames.game.vertex_set import VertexSet
from sasgames.oracles.fixed_strategy import check_fixed_strategy_sas
from sasgames.solvers.sas import solve_sas
from sasgames.strategies.base import (
    MealyStrategy,
    MemorylessStrategy,
    explore_memory,
    strategy_from_json,
)
from sasgames.strategies.counter import (
    CounterStrategy,
    RegisterStrategy,
    Schedule,
)
from sasgames.strategies.files import load_strategy_document, strategy_document
from sasgames.strategies.synth import (
    buchi_memory_bound,
    synth_counter_strategy,
    synth_finite_buchi,
    synth_memoryless_cobuchi,
    synth_spoiling,
)


def ids(n, *vs):
    return VertexSet.from_ids(n, vs)


@pytest.fixture
def cobuchi_game():
    return build_game([("p1", 1, 0, (0, 1)), ("p1", 0, 2, (1,))])


# 1. Schedules
def test_default_schedule():
    schedule = get_default_schedule(4)
    assert [schedule(i) for i in range(3)] == [16, 32, 64]
    assert schedule.to_json() == {"kind": "geometric", "n0": 16, "base": 2}


def test_table_schedule_doubles_past_the_end():
    schedule = Schedule(ScheduleConfig.parse("table:3,5"), 4)
    assert [schedule(i) for i in range(4)] == [3, 5, 10, 20]
    with pytest.raises(ValueError):
        schedule(-1)


@pytest.mark.parametrize(
    "text, n0, base",
    [("geometric:4,2", 4, 2), ("geometric:8,3", 8, 3), ("geometric:4", 4, 2)],
)
def test_parse_geometric(text, n0, base):
    config = ScheduleConfig.parse(text)
    assert (config.kind, config.n0, config.base) == ("geometric", n0, base)


@pytest.mark.parametrize("text", ["bogus:1", "geometric:", "geometric:0,2", "table:", "table:2,x"])
def test_parse_rejects_malformed_schedules(text):
    with pytest.raises(ValueError):
        ScheduleConfig.parse(text)


def test_constant_schedule_warns():
    with pytest.warns(UserWarning):
        Schedule(ScheduleConfig(n0=4, base=1), 4)


# 2. Machines
def test_memoryless_strategy(fig1):
    sigma = MemorylessStrategy(fig1, {0: 1, 2: 0, 3: 0})
    assert sigma.step(0) == 1
    assert sigma.step(1) is None
    assert sigma.memory_size == 1
    with pytest.raises(StrategyError):
        MemorylessStrategy(fig1, {0: 2})
    with pytest.raises(StrategyError):
        MemorylessStrategy(fig1, {1: 0})


def test_mealy_strategy_alternates(fig1):
    update = {(m, v): m for m in (0, 1) for v in range(4)}
    update[(0, 0)] = 1
    update[(1, 0)] = 0
    move = {(m, v): 0 for m in (0, 1) for v in (2, 3)}
    move.update({(0, 0): 1, (1, 0): 3})
    mealy = MealyStrategy(fig1, (0, 1), 0, update, move)
    assert [mealy.step(0), mealy.step(1), mealy.step(0), mealy.step(3)] == [1, None, 3, 0]
    again = strategy_from_json(fig1, mealy.to_json())
    assert again.memory_size == 2
    assert again.step(0) == 1
    with pytest.raises(StrategyError):
        MealyStrategy(fig1, (0, 1), 2, update, move)


def test_explore_memory(fig1):
    sigma = MemorylessStrategy(fig1, {0: 1, 2: 0, 3: 0})
    assert explore_memory(sigma, fig1.all).memory_size == 1
    update = {(m, v): 1 - m if v == 0 else m for m in (0, 1) for v in range(4)}
    move = {(m, v): 0 for m in (0, 1) for v in (2, 3)}
    move.update({(0, 0): 1, (1, 0): 3})
    mealy = MealyStrategy(fig1, (0, 1), 0, update, move)
    assert explore_memory(mealy, fig1.all).memory_size == 2
    with pytest.raises(BoundExceededError):
        explore_memory(mealy, fig1.all, max_memory=1)


# 3. The counter strategy
def test_fig1_counter_strategy(fig1):
    machine = synth_counter_strategy(fig1, schedule=ScheduleConfig.parse("table:3"))
    assert isinstance(machine, CounterStrategy)
    assert machine.odd == (1,)
    machine.step(0)
    assert machine.step(1) is None
    assert not machine.unlucky
    # third observation of priority 1 in a row closes a pure phase
    assert machine.step(0) == 3
    assert machine.unlucky
    assert machine.mode == "attr"
    assert [(e.step, e.vertex, e.priority) for e in machine.events] == [(2, 0, 1)]
    assert machine.step(3) == 0
    assert not machine.unlucky
    assert machine.recoveries == [1]
    assert machine.step(0) == 1
    assert machine.mode == "as"


def test_counter_strategy_stays_lucky_on_long_phases(fig1):
    machine = synth_counter_strategy(fig1, schedule=ScheduleConfig.parse("table:100"))
    machine.step(0)
    for _ in range(10):
        machine.step(1)
        machine.step(2)
        machine.step(0)
    assert not machine.unlucky
    assert machine.mode == "as"
    assert machine.events == []


def test_counter_strategy_reset(fig1):
    machine = synth_counter_strategy(fig1, schedule=ScheduleConfig.parse("table:3"))
    for v in (0, 1, 0):
        machine.step(v)
    machine.reset()
    assert not machine.unlucky and machine.events == []


def test_counter_strategy_needs_even_priority(fig1):
    sigma = MemorylessStrategy(fig1, {})
    with pytest.raises(ValueError):
        CounterStrategy(fig1, 3, fig1.all, sigma, sigma, None, VertexSet.empty(4), get_default_schedule(4))


def test_zero_sure_priorities_give_almost_sure_strategy(trivial_game):
    machine = synth_counter_strategy(trivial_game)
    assert isinstance(machine, RegisterStrategy)


def test_trace_of_another_game_is_rejected(fig1, fig5):
    with pytest.raises(StrategyError):
        synth_counter_strategy(fig1, trace=solve_sas(fig5).trace)


# 4. Memoryless and finite-memory synthesis
def test_cobuchi_example(cobuchi_game):
    sigma = synth_memoryless_cobuchi(cobuchi_game)
    assert sigma.choice == {0: 1, 1: 1}
    assert check_fixed_strategy_sas(cobuchi_game, sigma, cobuchi_game.all)


def test_cobuchi_with_zero_priorities(trivial_game):
    sigma = synth_memoryless_cobuchi(trivial_game)
    assert set(sigma.choice) == {0, 1}


def test_cobuchi_precondition(fig1):
    with pytest.raises(PreconditionError):
        synth_memoryless_cobuchi(fig1)


@pytest.mark.parametrize("seed", range(30))
def test_cobuchi_strategies_win(seed):
    game = random_game(seed, 6, d1=1, d2=3)
    w1 = solve_sas(game).w1
    sigma = synth_memoryless_cobuchi(game)
    assert check_fixed_strategy_sas(game, sigma, w1)


def test_buchi_on_fig1(fig1):
    game = fig1.with_priorities(omega2=(1, 1, 1, 2))
    mealy = synth_finite_buchi(game)
    assert mealy.memory_size <= buchi_memory_bound(game.n, game.d1)
    assert check_fixed_strategy_sas(game, mealy, game.all)


def test_buchi_precondition(fig1):
    with pytest.raises(PreconditionError):
        synth_finite_buchi(fig1)


@pytest.mark.parametrize("seed", range(30))
def test_buchi_strategies_win(seed):
    game = random_game(seed, 6, d1=3, d2=2)
    game = game.with_priorities(omega2=[max(p, 1) for p in game.omega2])
    w1 = solve_sas(game).w1
    mealy = synth_finite_buchi(game)
    assert mealy.memory_size <= buchi_memory_bound(game.n, game.d1)
    assert check_fixed_strategy_sas(game, mealy, w1)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_special_case_strategies_on_full_corpus(seed):
    game = random_game(seed, 6, d1=1, d2=3)
    sigma = synth_memoryless_cobuchi(game)
    assert isinstance(sigma, MemorylessStrategy)
    assert check_fixed_strategy_sas(game, sigma, solve_sas(game).w1)

    game = random_game(seed, 6, d1=3, d2=2)
    game = game.with_priorities(omega2=[max(p, 1) for p in game.omega2])
    mealy = synth_finite_buchi(game)
    assert mealy.memory_size <= buchi_memory_bound(game.n, game.d1)
    assert check_fixed_strategy_sas(game, mealy, solve_sas(game).w1)


def test_cobuchi_strategy_leaves_for_the_sink(user_sink):
    sigma = synth_memoryless_cobuchi(user_sink)
    assert sigma.choice == {0: 1}
    assert check_fixed_strategy_sas(user_sink, sigma, ids(2, 0))


# 5. Infinite memory is needed on fig1
def _mealy_machines(game, size):
    cells = [(m, v) for m in range(size) for v in range(game.n)]
    for targets in itertools.product(range(size), repeat=len(cells)):
        update = dict(zip(cells, targets))
        for moves in itertools.product(game.successors[0], repeat=size):
            move = {(m, v): 0 for m in range(size) for v in (2, 3)}
            move.update({(m, 0): u for m, u in enumerate(moves)})
            yield MealyStrategy(game, tuple(range(size)), 0, update, move)


@pytest.mark.parametrize("size", [1, 2])
def test_no_small_mealy_machine_wins_fig1(fig1, size):
    for machine in _mealy_machines(fig1, size):
        assert not check_fixed_strategy_sas(fig1, machine, ids(4, 0))


def _return_machines(game, size):
    """
    Machines described by their memory at the visits of v_a.

    A state either moves to v_b and jumps on the return through v_b alone
    or through v_c, or moves to v_d and jumps on the return through it. Any
    Mealy machine with `size` memory states induces one of these, so this
    family covers every such machine. Each is realized as a Mealy machine
    remembering the last state and how far the play got since leaving v_a.
    """
    options = [("a", (x, y)) for x in range(size) for y in range(size)]
    options += [("b", x) for x in range(size)]
    memory = [(s, tag) for s in range(size) for tag in ("home", "left", "after1")]
    for kinds in itertools.product(options, repeat=size):

        def resolve(s, tag, kinds=kinds):
            kind, target = kinds[s]
            return target[0] if tag == "after1" and kind == "a" else s

        move, update = {}, {}
        for s, tag in memory:
            t = resolve(s, tag)
            kind, target = kinds[s]
            move[(s, tag), 0] = 1 if kinds[t][0] == "a" else 3
            move[(s, tag), 2] = 0
            move[(s, tag), 3] = 0
            update[(s, tag), 0] = (t, "left")
            update[(s, tag), 1] = (s, "after1")
            update[(s, tag), 2] = (target[1] if kind == "a" else s, "home")
            update[(s, tag), 3] = (target if kind == "b" else s, "home")
        yield MealyStrategy(game, memory, (0, "home"), update, move)


@pytest.mark.slow
def test_no_three_state_mealy_machine_wins_fig1(fig1):
    machines = list(_return_machines(fig1, 3))
    assert len(machines) == 12 ** 3
    for machine in machines:
        assert not check_fixed_strategy_sas(fig1, machine, ids(4, 0))


# 6. Spoiling strategies
def test_spoiler_on_all_odd_game(all_odd):
    result = synth_spoiling(all_odd)
    assert result.memoryless is not None
    assert result.memoryless.choice == {}


def test_spoiler_on_fig5(fig5):
    result = synth_spoiling(fig5)
    assert result.memoryless.choice == {0: 0, 4: 4}
    fixed = fix_strategy(fig5, 2, result.memoryless.choice)
    assert solve_sas(fixed).w1.isdisjoint(ids(5, 0, 1, 4))
    assert result.machine.player == 2


# 7. Strategy documents
def test_counter_document_round_trip(fig1):
    config = ScheduleConfig.parse("table:3")
    machine = synth_counter_strategy(fig1, schedule=config)
    document = strategy_document(fig1, machine, Schedule(config, fig1.n))
    assert document["kind"] == "counter"
    assert document["schedule"] == {"kind": "table", "table": [3]}
    loaded = load_strategy_document(fig1, document)
    assert isinstance(loaded, CounterStrategy)
    assert loaded.schedule(1) == 6


def test_memoryless_document_round_trip(cobuchi_game):
    sigma = synth_memoryless_cobuchi(cobuchi_game)
    loaded = load_strategy_document(cobuchi_game, strategy_document(cobuchi_game, sigma))
    assert loaded.choice == sigma.choice


def test_documents_are_bound_to_their_game(fig1, cobuchi_game):
    document = strategy_document(cobuchi_game, synth_memoryless_cobuchi(cobuchi_game))
    with pytest.raises(StrategyError):
        load_strategy_document(fig1, document)
    with pytest.raises(StrategyError):
        load_strategy_document(cobuchi_game, dict(document, schema=99))
    with pytest.raises(StrategyError):
        strategy_document(fig1, synth_counter_strategy(fig1))
