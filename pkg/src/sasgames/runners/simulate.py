"""
    Seeded simulation of a Player-1 strategy.
"""
import logging
from dataclasses import replace

import click
import numpy as np

from sasgames.config import AppConfig, ScheduleConfig
from sasgames.constants import JSON_KEYS, PLAYER2, SCHEMA_VERSION
from sasgames.errors import PreconditionError, StrategyError
from sasgames.game.spg_format import load_game
from sasgames.solvers.sas import solve_sas
from sasgames.strategies.files import load_strategy
from sasgames.strategies.simulate import simulate_runs
from sasgames.strategies.synth import synth_counter_strategy
from sasgames.utils.io import emit

logger = logging.getLogger(__name__)


def _summary(stats) -> dict:
    recoveries = [r for s in stats for r in s.recovery_steps]
    return {
        "runs": len(stats),
        "runs_with_unlucky": sum(1 for s in stats if s.unlucky),
        "unlucky_events": sum(len(s.unlucky) for s in stats),
        "max_recovery_steps": max(recoveries, default=0),
        "mean_recovery_steps": float(np.mean(recoveries)) if recoveries else 0.0,
    }


@click.command(name="simulate")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option("--strategy", "strategy_file", type=click.Path(dir_okay=False), default=None, help="Player-1 strategy written by `synth` (default: synthesize a counter strategy).")
@click.option("--seed", type=int, default=None, help="Seed of the run generator.")
@click.option("--steps", type=int, default=None, help="Steps per run.")
@click.option("--runs", type=int, default=None, help="Number of independent runs.")
@click.option("--start", type=int, default=None, help="Initial vertex (default: the smallest winning vertex).")
@click.option("--schedule", default=None, help="geometric:<N0>,<base> or table:<n>,<n>,...")
@click.option("--adversary", default=None, help="`random` or a Player-2 strategy file.")
@click.option("--jobs", type=int, default=None, help="Worker threads for the runs.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the report here instead of stdout.")
@click.pass_context
def simulate(ctx, game_file, strategy_file, seed, steps, runs, start, schedule, adversary, jobs, output):
    """Simulate a Player-1 strategy on the game in GAME_FILE."""
    config: AppConfig = ctx.obj
    overrides = {
        name: value
        for name, value in (
            ("seed", seed), ("steps", steps), ("runs", runs), ("adversary", adversary), ("jobs", jobs)
        )
        if value is not None
    }
    sim = replace(config.simulation, **overrides).validate()
    if schedule is not None and strategy_file is not None:
        raise click.UsageError("--schedule only applies to a synthesized strategy")

    game = load_game(game_file)
    if strategy_file is not None:
        sigma1 = load_strategy(game, strategy_file)
        if sigma1.player == PLAYER2:
            raise StrategyError("--strategy must be a Player-1 strategy")
        winning = None
    else:
        trace = solve_sas(game, config=config.solver).trace
        schedule_config = ScheduleConfig.parse(schedule) if schedule else config.schedule
        sigma1 = synth_counter_strategy(game, trace=trace, schedule=schedule_config)
        winning = trace.root.w1

    if start is None:
        if winning is None:
            winning = solve_sas(game, config=config.solver).w1
        if not winning:
            raise PreconditionError("Player 1 wins from no vertex; pass --start explicitly")
        start = min(winning)
    if not 0 <= start < game.n:
        raise PreconditionError(f"no vertex {start} in a game with {game.n} vertices")

    opponent = sim.adversary
    if opponent != "random":
        opponent = load_strategy(game, opponent)
        if opponent.player != PLAYER2:
            raise StrategyError("--adversary must be a Player-2 strategy")

    stats = simulate_runs(
        game, sigma1, sim.runs, seed=sim.seed, steps=sim.steps, start=start, adversary=opponent, jobs=sim.jobs
    )
    emit(
        {
            JSON_KEYS.SCHEMA: SCHEMA_VERSION,
            "seed": sim.seed,
            "start": start,
            "summary": _summary(stats),
            "runs": [s.to_json() for s in stats],
        },
        output,
    )
