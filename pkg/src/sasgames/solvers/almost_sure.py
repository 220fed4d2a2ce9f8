"""
    Qualitative almost-sure analysis of stochastic games.

`solve_as_parity` is a Zielonka-style recursion that extracts Player-2
dominions (regions where Player 2 wins with positive probability) one at
a time and never builds intermediate games: every recursive call only
narrows an arena inside the original game.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from sasgames.constants import PLAYER1, PLAYER2
from sasgames.game.core import Owner, StochasticGame, opponent
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.attractors import AttractorResult, attract, pos_attractor

logger = logging.getLogger(__name__)


def as_reach(
    game: StochasticGame,
    player: int,
    target: VertexSet,
    arena: Optional[VertexSet] = None,
) -> AttractorResult:
    """
    Almost-sure reachability: vertices from which `player` reaches `target`
    with probability 1 against every opponent strategy.

    Greatest fixpoint over a shrinking safe set `Y`: keep the vertices that
    can positively reach the target while neither the opponent nor a random
    vertex can leave `Y`.

    Returns:
        AttractorResult: The region with a memoryless strategy that lowers
        the rank on every owned vertex outside the target.
    """
    arena = game.all if arena is None else arena
    owner = Owner.of_player(player)
    target = target & arena
    safe = arena
    while True:
        leaking = VertexSet(
            [
                v in safe
                and v not in target
                and game.owners[v] is not owner
                and not all(u in safe for u in game.successors[v] if u in arena)
                for v in range(game.n)
            ]
        )
        result = attract(game, player, target, positive=True, arena=safe, excluded=leaking)
        if result.region == safe:
            return result
        safe = result.region


@dataclass(frozen=True)
class AlmostSureResult:
    """Almost-sure winning region of Player 1 with a memoryless winning strategy."""

    region: VertexSet
    strategy: Dict[int, int] = field(default_factory=dict)


def solve_as_parity(
    game: StochasticGame,
    omega: Optional[Sequence[int]] = None,
    arena: Optional[VertexSet] = None,
) -> AlmostSureResult:
    """
    Almost-sure winning region of Player 1 for `Parity(omega)`.

    Args:
        game (StochasticGame): The game.
        omega (Optional[Sequence[int]]): Priorities, default `game.omega1`.
        arena (Optional[VertexSet]): A region inducing a subgame to solve in,
            default all vertices.

    Returns:
        AlmostSureResult: The region and a memoryless strategy defined on
        every Player-1 vertex of the region; the strategy keeps the play in
        the region and wins with probability 1 from each of its vertices.
    """
    omega = game.omega1 if omega is None else tuple(omega)
    arena = game.all if arena is None else arena
    region, strategy = _AlmostSureSolver(game, omega).solve(arena)
    return AlmostSureResult(region, strategy)


class _AlmostSureSolver:
    def __init__(self, game: StochasticGame, omega: Sequence[int]):
        self.game = game
        self.omega = omega
        self.p1 = Owner.P1

    def solve(self, arena: VertexSet) -> Tuple[VertexSet, Dict[int, int]]:
        """Split off Player-2 dominions until none is left."""
        if not arena:
            return arena, {}
        dominions = VertexSet.empty(self.game.n)
        current = arena
        while True:
            dominion, strategy = self.find_dominion(current)
            if dominion is None:
                return current, strategy
            dominions = dominions | dominion
            current = arena - pos_attractor(self.game, PLAYER2, dominions, arena=arena).region

    def _any_move(self, vertices: VertexSet, arena: VertexSet) -> Dict[int, int]:
        game = self.game
        return {
            v: min(u for u in game.successors[v] if u in arena)
            for v in vertices
            if game.owners[v] is self.p1
        }

    def find_dominion(
        self, arena: VertexSet
    ) -> Tuple[Optional[VertexSet], Dict[int, int]]:
        """
        Either a non-empty region of `arena` where Player 2 wins with
        positive probability, or `None` with a Player-1 strategy winning
        almost surely on the whole arena.
        """
        game = self.game
        if not arena:
            return None, {}
        d = max(self.omega[v] for v in arena)
        top = game.priority_set(self.omega, d, arena)
        logger.debug("almost-sure node: d=%d |arena|=%d |top|=%d", d, len(arena), len(top))

        if d % 2 == 0:
            attr = pos_attractor(game, PLAYER1, top, arena=arena)
            rest, sub_strategy = self.solve(arena - attr.region)
            lost = (arena - attr.region) - rest
            if lost:
                return lost, {}
            strategy = dict(sub_strategy)
            strategy.update(attr.strategy)
            strategy.update(self._any_move(top, arena))
            return None, strategy

        attr = pos_attractor(game, PLAYER2, top, arena=arena)
        won, won_strategy = self.solve(arena - attr.region)
        if not won:
            return arena, {}
        reach = as_reach(game, PLAYER1, won, arena=arena)
        pull = pos_attractor(game, PLAYER1, reach.region, arena=arena)
        strategy = dict(won_strategy)
        strategy.update(reach.strategy)
        strategy.update(pull.strategy)
        remainder = arena - pull.region
        if not remainder:
            return None, strategy
        rest, rest_strategy = self.solve(remainder)
        if rest != remainder:
            return remainder - rest, {}
        strategy.update(rest_strategy)
        return None, strategy
