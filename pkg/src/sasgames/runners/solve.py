"""
    Winning regions of a game.
"""
import logging

import click

from sasgames.config import AppConfig
from sasgames.constants import EXIT_NEGATIVE, JSON_KEYS, SCHEMA_VERSION
from sasgames.errors import PreconditionError
from sasgames.game.core import derandomize
from sasgames.game.spg_format import load_game, region_to_json
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.solvers.sas import solve_sas
from sasgames.solvers.zielonka import solve_parity_zielonka
from sasgames.utils.io import emit

logger = logging.getLogger(__name__)


@click.command(name="solve")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option(
    "--objective",
    type=click.Choice(["sas", "as", "sure"]),
    default="sas",
    show_default=True,
    help="sas: sure p1 and almost-sure p2; as: almost-sure p2 only; sure: sure p1 only.",
)
@click.option("--vertex", type=int, default=None, help="Exit with 1 unless this vertex is winning.")
@click.option(
    "--trace",
    "trace_file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the full derivation trace to this file (sas only).",
)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the result here instead of stdout.")
@click.pass_context
def solve(ctx, game_file, objective, vertex, trace_file, output):
    """Solve the game in GAME_FILE and print its winning regions."""
    config: AppConfig = ctx.obj
    if trace_file is not None and objective != "sas":
        raise click.UsageError("--trace is only available for the sas objective")
    game = load_game(game_file)
    if vertex is not None and not 0 <= vertex < game.n:
        raise PreconditionError(f"no vertex {vertex} in a game with {game.n} vertices")

    document = {JSON_KEYS.SCHEMA: SCHEMA_VERSION, "objective": objective}
    if objective == "sas":
        result = solve_sas(game, config=config.solver)
        w1, w2 = result.w1, result.w2
        document[JSON_KEYS.TRACE_DIGEST] = result.trace.digest()
        if trace_file is not None:
            emit(
                {JSON_KEYS.SCHEMA: SCHEMA_VERSION, JSON_KEYS.TRACE: result.trace.to_json()},
                trace_file,
            )
    elif objective == "as":
        w1 = solve_as_parity(game, game.omega2).region & game.real
        w2 = game.real - w1
    else:
        w1 = solve_parity_zielonka(derandomize(game), game.omega1).w1 & game.real
        w2 = game.real - w1

    document[JSON_KEYS.WINNING] = region_to_json(w1)
    document[JSON_KEYS.LOSING] = region_to_json(w2)
    emit(document, output)
    if vertex is not None and vertex not in w1:
        logger.info("vertex %d is not winning for Player 1", vertex)
        ctx.exit(EXIT_NEGATIVE)
