from sasgames.strategies.base import (
    EmbeddedStrategy,
    MealyStrategy,
    MemorylessStrategy,
    RegionSwitch,
    StrategyMachine,
    explore_memory,
    strategy_from_json,
)
from sasgames.strategies.counter import CounterStrategy, RegisterStrategy, Schedule
from sasgames.strategies.files import load_strategy, load_strategy_document, strategy_document
from sasgames.strategies.simulate import SimulationStats, simulate, simulate_runs
from sasgames.strategies.synth import (
    SpoilingResult,
    synth_counter_strategy,
    synth_finite_buchi,
    synth_memoryless_cobuchi,
    synth_spoiling,
)

__all__ = [
    "CounterStrategy",
    "EmbeddedStrategy",
    "MealyStrategy",
    "MemorylessStrategy",
    "RegionSwitch",
    "RegisterStrategy",
    "Schedule",
    "SimulationStats",
    "SpoilingResult",
    "StrategyMachine",
    "explore_memory",
    "load_strategy",
    "load_strategy_document",
    "simulate",
    "simulate_runs",
    "strategy_document",
    "strategy_from_json",
    "synth_counter_strategy",
    "synth_finite_buchi",
    "synth_memoryless_cobuchi",
    "synth_spoiling",
]
