"""
    Brute-force oracles for cross-checking the solvers on small inputs.
"""
import logging
from dataclasses import replace

import click

from sasgames.automata.d2pw import D2PW, DPW, load_automaton
from sasgames.config import AppConfig
from sasgames.constants import EXIT_NEGATIVE, JSON_KEYS, PLAYER1, SCHEMA_VERSION
from sasgames.errors import GameFormatError, StrategyError
from sasgames.game.spg_format import load_game, region_from_json, region_to_json
from sasgames.oracles.equivalence import dpw_equiv_oracle
from sasgames.oracles.fixed_strategy import check_fixed_strategy_sas
from sasgames.oracles.regions import oracle_as_parity_region, oracle_sas_region
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.solvers.sas import solve_sas
from sasgames.strategies.files import load_strategy_document
from sasgames.utils.io import emit, read_json

logger = logging.getLogger(__name__)


def _bounds(config: AppConfig, **values):
    return replace(
        config.oracle, **{k: v for k, v in values.items() if v is not None}
    ).validate()


def _compare(ctx, oracle, solver):
    """Emit both regions; exit 1 with the first differing vertex if they disagree."""
    document = {
        JSON_KEYS.SCHEMA: SCHEMA_VERSION,
        "oracle": region_to_json(oracle),
        "solver": region_to_json(solver),
        "agree": oracle == solver,
    }
    if oracle != solver:
        document["witness"] = min((oracle - solver) | (solver - oracle))
    emit(document)
    if oracle != solver:
        ctx.exit(EXIT_NEGATIVE)


@click.group(name="oracle")
def oracle():
    """Brute-force ground truth for small games and automata."""


@oracle.command(name="dpw-equiv")
@click.argument("d2pw_file", type=click.Path(dir_okay=False))
@click.argument("dpw_file", type=click.Path(dir_okay=False))
@click.option("--max-states", type=int, default=None, help="Bound on the synchronized product.")
@click.option("--max-scc", type=int, default=None, help="Largest SCC cross-checked by subset enumeration.")
@click.pass_context
def dpw_equiv(ctx, d2pw_file, dpw_file, max_states, max_scc):
    """Do D2PW_FILE and DPW_FILE accept the same words?"""
    a, b = load_automaton(d2pw_file), load_automaton(dpw_file)
    if not isinstance(a, D2PW) or not isinstance(b, DPW):
        raise GameFormatError("expected a D2PW and a DPW, in this order")
    result = dpw_equiv_oracle(a, b, _bounds(ctx.obj, max_states=max_states, max_scc=max_scc))
    emit({JSON_KEYS.SCHEMA: SCHEMA_VERSION, **result.to_json()})
    if not result:
        ctx.exit(EXIT_NEGATIVE)


@oracle.command(name="as-region")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option("--max-strategies", type=int, default=None, help="Bound on enumerated Player-1 strategies.")
@click.option("--jobs", type=int, default=None, help="Worker threads.")
@click.pass_context
def as_region(ctx, game_file, max_strategies, jobs):
    """Compare the almost-sure region of the second priorities with enumeration."""
    game = load_game(game_file)
    bounds = _bounds(ctx.obj, max_strategies=max_strategies, jobs=jobs)
    expected = oracle_as_parity_region(game, game.omega2, bounds) & game.real
    actual = solve_as_parity(game, game.omega2).region & game.real
    _compare(ctx, expected, actual)


@oracle.command(name="sas-region")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option("--max-strategies", type=int, default=None, help="Bound on enumerated Player-2 strategies.")
@click.option("--jobs", type=int, default=None, help="Worker threads.")
@click.pass_context
def sas_region(ctx, game_file, max_strategies, jobs):
    """Compare the sure-almost-sure region with enumeration of Player-2 strategies."""
    game = load_game(game_file)
    bounds = _bounds(ctx.obj, max_strategies=max_strategies, jobs=jobs)
    _compare(ctx, oracle_sas_region(game, config=bounds), solve_sas(game, config=ctx.obj.solver).w1)


@oracle.command(name="check-strategy")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.argument("strategy_file", type=click.Path(dir_okay=False))
@click.option(
    "--claimed",
    "claimed_ids",
    type=int,
    multiple=True,
    help="Vertex the strategy must win from (repeatable); default: the winning region stored with the strategy.",
)
@click.option("--max-states", type=int, default=None, help="Bound on the product with the strategy memory.")
@click.pass_context
def check_strategy(ctx, game_file, strategy_file, claimed_ids, max_states):
    """Does the finite-memory Player-1 strategy in STRATEGY_FILE win?"""
    game = load_game(game_file)
    data = read_json(strategy_file)
    sigma1 = load_strategy_document(game, data)
    if sigma1.player != PLAYER1 or sigma1.memory_size is None:
        raise StrategyError("expected a finite-memory Player-1 strategy")
    if not claimed_ids and "winning" not in data:
        raise click.UsageError("pass --claimed, the strategy file names no winning region")
    claimed = region_from_json(game.n, claimed_ids or data["winning"])
    bounds = _bounds(ctx.obj, max_states=max_states)
    verdict = check_fixed_strategy_sas(game, sigma1, claimed, max_states=bounds.max_states)
    emit({JSON_KEYS.SCHEMA: SCHEMA_VERSION, "claimed": region_to_json(claimed), **verdict.to_json()})
    if not verdict:
        ctx.exit(EXIT_NEGATIVE)
