"""
    Winning regions by enumerating memoryless strategies.

Both oracles rely on memoryless strategies being sufficient: for Player 1
in almost-sure parity games, and for Player 2 in sure-almost-sure games.
Each candidate strategy is fixed, leaving a game with a single controller.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterator, Optional, Sequence

from sasgames.config import OracleConfig, SolverConfig
from sasgames.constants import PLAYER1, PLAYER2
from sasgames.defaults import get_default_oracle_config
from sasgames.errors import BoundExceededError
from sasgames.game.core import StochasticGame, fix_strategy, memoryless_choices
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.mdp import mdp_pos_parity
from sasgames.solvers.sas import solve_sas

logger = logging.getLogger(__name__)


def count_strategies(game: StochasticGame, player: int) -> int:
    _, options = memoryless_choices(game, player)
    total = 1
    for opts in options:
        total *= len(opts)
    return total


def memoryless_strategies(
    game: StochasticGame, player: int, bound: Optional[int] = None
) -> Iterator[Dict[int, int]]:
    """
    Every memoryless strategy of `player`, lowest successors first.

    Raises:
        BoundExceededError: If there are more than `bound` strategies.
    """
    total = count_strategies(game, player)
    if bound is not None and total > bound:
        raise BoundExceededError(f"memoryless strategies of player {player}", total, bound)
    owned, options = memoryless_choices(game, player)
    for combo in itertools.product(*options):
        yield dict(zip(owned, combo))


def oracle_as_parity_region(
    game: StochasticGame,
    omega: Optional[Sequence[int]] = None,
    config: Optional[OracleConfig] = None,
) -> VertexSet:
    """Vertices from which some memoryless Player-1 strategy wins `Parity(omega)` almost surely."""
    config = get_default_oracle_config() if config is None else config
    omega = game.omega1 if omega is None else tuple(omega)
    complement = [p + 1 for p in omega]

    def won(choice: Dict[int, int]) -> VertexSet:
        fixed = fix_strategy(game, PLAYER1, choice)
        return fixed.all - mdp_pos_parity(fixed, complement)

    strategies = list(memoryless_strategies(game, PLAYER1, config.max_strategies))
    region = VertexSet.empty(game.n)
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        for part in pool.map(won, strategies):
            region = region | part
    logger.info("almost-sure oracle: %d strategies, |W|=%d", len(strategies), len(region))
    return region


def oracle_sas_region(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    config: Optional[OracleConfig] = None,
) -> VertexSet:
    """Vertices won by Player 1 against every memoryless Player-2 strategy."""
    config = get_default_oracle_config() if config is None else config
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    solver = SolverConfig(memoize=False)

    def won(choice: Dict[int, int]) -> VertexSet:
        return solve_sas(fix_strategy(game, PLAYER2, choice), config=solver).w1

    strategies = list(memoryless_strategies(game, PLAYER2, config.max_strategies))
    region = game.real
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        for part in pool.map(won, strategies):
            region = region & part
    logger.info("sure-almost-sure oracle: %d strategies, |W|=%d", len(strategies), len(region))
    return region
