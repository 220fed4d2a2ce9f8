"""
    Strategy synthesis.
"""
import logging

import click

from sasgames.config import AppConfig, ScheduleConfig
from sasgames.constants import PLAYER2
from sasgames.errors import StrategyError
from sasgames.game.spg_format import load_game
from sasgames.solvers.sas import solve_sas
from sasgames.strategies.base import MemorylessStrategy
from sasgames.strategies.counter import Schedule
from sasgames.strategies.files import strategy_document
from sasgames.strategies.synth import (
    buchi_memory_bound,
    synth_counter_strategy,
    synth_finite_buchi,
    synth_memoryless_cobuchi,
    synth_spoiling,
)
from sasgames.utils.io import emit

logger = logging.getLogger(__name__)


@click.command(name="synth")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option(
    "--kind",
    type=click.Choice(["counter", "cobuchi", "buchi", "spoiling"]),
    default="counter",
    show_default=True,
    help="counter: general Player-1 strategy; cobuchi: memoryless (sure priorities 0/1); "
    "buchi: finite memory (almost-sure priorities 1/2); spoiling: Player 2 on the losing region.",
)
@click.option(
    "--schedule",
    default=None,
    help="Phase lengths of the counter machines: geometric:<N0>,<base> or table:<n>,<n>,...",
)
@click.option("--max-memory", type=int, default=1 << 16, show_default=True, help="Memory bound of the Büchi machine.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the strategy here instead of stdout.")
@click.pass_context
def synth(ctx, game_file, kind, schedule, max_memory, output):
    """Synthesize a strategy for the game in GAME_FILE."""
    config: AppConfig = ctx.obj
    schedule_config = ScheduleConfig.parse(schedule) if schedule else config.schedule
    game = load_game(game_file)
    trace = solve_sas(game, config=config.solver).trace

    phases = None
    if kind == "counter":
        machine = synth_counter_strategy(game, trace=trace, schedule=schedule_config)
        phases = Schedule(schedule_config, game.n)
    elif kind == "cobuchi":
        machine = synth_memoryless_cobuchi(game, trace=trace)
    elif kind == "buchi":
        machine = synth_finite_buchi(game, trace=trace, max_memory=max_memory)
        logger.info(
            "memory %d of bound %d", machine.memory_size, buchi_memory_bound(game.n, game.d1)
        )
    elif not trace.root.w2:
        machine = MemorylessStrategy(game, {}, PLAYER2)
    else:
        result = synth_spoiling(game, trace=trace, config=config.oracle)
        if result.memoryless is None:
            raise StrategyError("no memoryless spoiling strategy within the oracle bounds")
        machine = result.memoryless

    document = strategy_document(game, machine, phases)
    document["winning"] = trace.root.w1.to_list()
    document["losing"] = trace.root.w2.to_list()
    emit(document, output)
