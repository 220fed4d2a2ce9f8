# test_oracles.py
from dataclasses import replace

import pytest

from sasgames.automata.d2pw import D2PW, DPW, load_automaton
from sasgames.automata.lasso import accepts_word
from sasgames.automata.product import build_conjunction_dpw
from sasgames.config import OracleConfig
from sasgames.data import example_path
from sasgames.errors import BoundExceededError, PreconditionError
from sasgames.game.core import Owner
from sasgames.game.generate import random_game
from sasgames.game.vertex_set import VertexSet
from sasgames.oracles.equivalence import dpw_equiv_oracle
from sasgames.oracles.fixed_strategy import check_fixed_strategy_sas, strategy_product
from sasgames.oracles.regions import (
    count_strategies,
    memoryless_strategies,
    oracle_as_parity_region,
    oracle_sas_region,
)
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.strategies.base import MemorylessStrategy


@pytest.fixture
def example():
    return load_automaton(example_path("example.d2pw"))


# 1. Automaton equivalence
def test_conjunction_matches_example(example):
    result = dpw_equiv_oracle(example, build_conjunction_dpw(example).dpw)
    assert result.equal
    assert result.to_json() == {"verdict": "equal"}


def test_changed_priority_gives_counterexample(example):
    conj = build_conjunction_dpw(example)
    omega = list(conj.dpw.omega)
    omega[conj.states.index((2, (6, 6)))] = 15
    wrong = replace(conj.dpw, omega=tuple(omega))
    result = dpw_equiv_oracle(example, wrong)
    assert not result.equal
    assert result.cycle
    assert accepts_word(example, result.stem, result.cycle) != accepts_word(
        wrong, result.stem, result.cycle
    )


def test_empty_against_universal():
    empty = D2PW(("a", "b"), 0, ((0, 0),), (1,), (0,))
    universal = DPW(("a", "b"), 0, ((0, 0),), (0,))
    result = dpw_equiv_oracle(empty, universal)
    assert not result.equal
    assert accepts_word(universal, result.stem, result.cycle)
    assert result.to_json()["verdict"] == "different"


def test_equivalence_preconditions(example):
    other = DPW(("a", "c"), 0, ((0, 0),), (0,))
    with pytest.raises(PreconditionError):
        dpw_equiv_oracle(example, other)
    with pytest.raises(BoundExceededError):
        dpw_equiv_oracle(example, build_conjunction_dpw(example).dpw, OracleConfig(max_states=2))


# 2. Region oracles
def test_strategy_counts(fig1, fig5):
    assert count_strategies(fig1, 1) == 2
    assert count_strategies(fig5, 2) == 4
    assert len(list(memoryless_strategies(fig5, 2))) == 4
    strategies = memoryless_strategies(fig5, 2, bound=3)
    with pytest.raises(BoundExceededError):
        next(strategies)


def test_region_oracles_on_bundled_games(fig1, all_odd):
    assert oracle_as_parity_region(fig1, fig1.omega2) == fig1.all
    assert oracle_sas_region(fig1) == fig1.all
    assert not oracle_sas_region(all_odd)
    with pytest.raises(BoundExceededError):
        oracle_as_parity_region(fig1, config=OracleConfig(max_strategies=1))


@pytest.mark.parametrize("seed", range(20))
def test_almost_sure_oracle_agrees_with_solver(seed):
    game = random_game(seed, 5)
    assert oracle_as_parity_region(game, config=OracleConfig(jobs=2)) == solve_as_parity(game).region


# 3. Fixed strategies
def test_strategy_product(fig1):
    sigma = MemorylessStrategy(fig1, {0: 1, 2: 0, 3: 0})
    product, order = strategy_product(fig1, sigma, VertexSet.from_ids(4, [0]))
    assert order == [(0, 0), (1, 0), (2, 0)]
    assert product.owners[0] is Owner.RANDOM
    assert product.successors[0] == (1,)
    with pytest.raises(BoundExceededError):
        strategy_product(fig1, sigma, fig1.all, max_states=2)


def test_fixed_strategy_verdicts(fig1):
    claimed = VertexSet.from_ids(4, [0])
    always_b = MemorylessStrategy(fig1, {0: 1, 2: 0, 3: 0})
    verdict = check_fixed_strategy_sas(fig1, always_b, claimed)
    assert not verdict and verdict.diagnostic.startswith("sure")
    always_d = MemorylessStrategy(fig1, {0: 3, 2: 0, 3: 0})
    verdict = check_fixed_strategy_sas(fig1, always_d, claimed)
    assert not verdict and verdict.diagnostic.startswith("almost-sure")
    assert check_fixed_strategy_sas(fig1, always_b, claimed, omega1=(0,) * 4, omega2=(0,) * 4)
    assert check_fixed_strategy_sas(fig1, always_b, VertexSet.empty(4))
