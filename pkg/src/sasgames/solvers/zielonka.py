"""
    Zielonka's recursive algorithm for two-player parity games (max-even).

The loop form follows McNaughton: peel the attractor of the top priority,
solve the rest, and strip the opponent's attractor to its winning region
until the opponent wins nothing in the remainder.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from sasgames.constants import PLAYER1, PLAYER2
from sasgames.errors import PreconditionError
from sasgames.game.core import Owner, StochasticGame, opponent
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.attractors import sure_attractor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParityResult:
    """Winning partition of a two-player parity game and memoryless winning strategies."""

    w1: VertexSet
    w2: VertexSet
    strategy1: Dict[int, int] = field(default_factory=dict)
    strategy2: Dict[int, int] = field(default_factory=dict)

    def region(self, player: int) -> VertexSet:
        return self.w1 if player == PLAYER1 else self.w2

    def strategy(self, player: int) -> Dict[int, int]:
        return self.strategy1 if player == PLAYER1 else self.strategy2


def solve_parity_zielonka(
    game: StochasticGame,
    omega: Optional[Sequence[int]] = None,
    arena: Optional[VertexSet] = None,
) -> ParityResult:
    """
    Solve the parity game `Parity(omega)` for Player 1.

    Args:
        game (StochasticGame): A game without random vertices in the arena.
        omega (Optional[Sequence[int]]): Priorities, default `game.omega1`.
        arena (Optional[VertexSet]): Subgame to solve, default all vertices.

    Returns:
        ParityResult: Partition of the arena with memoryless strategies
        defined on every vertex each player owns in its winning region.

    Raises:
        PreconditionError: If the arena contains a random vertex.
    """
    omega = game.omega1 if omega is None else tuple(omega)
    arena = game.all if arena is None else arena
    for v in arena:
        if game.owners[v] is Owner.RANDOM:
            raise PreconditionError("Zielonka needs a game without random vertices", vertex=v)
    wins, strategies = _solve(game, omega, arena)
    return ParityResult(wins[PLAYER1], wins[PLAYER2], strategies[PLAYER1], strategies[PLAYER2])


def _solve(game: StochasticGame, omega: Sequence[int], arena: VertexSet):
    empty = VertexSet.empty(game.n)
    if not arena:
        return {PLAYER1: empty, PLAYER2: empty}, {PLAYER1: {}, PLAYER2: {}}

    d = max(omega[v] for v in arena)
    player = PLAYER1 if d % 2 == 0 else PLAYER2
    other = opponent(player)
    lost = empty
    lost_strategy: Dict[int, int] = {}
    current = arena
    while True:
        top = game.priority_set(omega, d, current)
        attr = sure_attractor(game, player, top, arena=current)
        wins, strategies = _solve(game, omega, current - attr.region)
        if not wins[other]:
            strategy = dict(strategies[player])
            strategy.update(attr.strategy)
            owner = Owner.of_player(player)
            for v in top:
                if game.owners[v] is owner:
                    strategy[v] = min(u for u in game.successors[v] if u in current)
            return (
                {player: current, other: lost},
                {player: strategy, other: lost_strategy},
            )
        escape = sure_attractor(game, other, wins[other], arena=current)
        lost_strategy.update(strategies[other])
        lost_strategy.update(escape.strategy)
        lost = lost | escape.region
        current = current - escape.region
