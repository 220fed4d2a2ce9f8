"""
    Predecessor operators and sure / positive attractors.

Attractors are computed with a layered worklist and per-vertex counters of
successors still outside the region, so every edge is inspected a bounded
number of times. Every function accepts an optional `arena`: the
computation then runs in the subgame induced by the arena, ignoring edges
that leave it.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from sasgames.game.core import Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AttractorResult:
    """
    Region of an attractor with its memoryless attractor strategy.

    Attributes:
        region (VertexSet): The attractor, always a superset of the target
            (restricted to the arena).
        strategy (Dict[int, int]): Move of every vertex of the attracting
            player in `region` minus the target. Each move lowers the rank.
        ranks (Dict[int, int]): Round in which each region vertex entered; 0
            for the target.
    """

    region: VertexSet
    strategy: Dict[int, int] = field(default_factory=dict)
    ranks: Dict[int, int] = field(default_factory=dict)

    @property
    def target(self) -> VertexSet:
        return VertexSet.from_ids(
            self.region.n, (v for v, r in self.ranks.items() if r == 0)
        )


def sure_pre(game: StochasticGame, player: int, region: VertexSet) -> VertexSet:
    """Vertices from which `player` surely reaches `region` in one step."""
    owner = Owner.of_player(player)
    return VertexSet(
        [
            any(u in region for u in game.successors[v])
            if game.owners[v] is owner
            else all(u in region for u in game.successors[v])
            for v in range(game.n)
        ]
    )


def pos_pre(game: StochasticGame, player: int, region: VertexSet) -> VertexSet:
    """Vertices from which `player` reaches `region` in one step with positive probability."""
    owner = Owner.of_player(player)
    return VertexSet(
        [
            any(u in region for u in game.successors[v])
            if game.owners[v] in (owner, Owner.RANDOM)
            else all(u in region for u in game.successors[v])
            for v in range(game.n)
        ]
    )


def attract(
    game: StochasticGame,
    player: int,
    target: VertexSet,
    positive: bool,
    arena: Optional[VertexSet] = None,
    excluded: Optional[VertexSet] = None,
) -> AttractorResult:
    """
    Shared worklist behind `sure_attractor`, `pos_attractor` and `as_reach`.

    Args:
        game (StochasticGame): The game.
        player (int): Attracting player.
        target (VertexSet): Target set, intersected with the arena.
        positive (bool): If True, random vertices need a single successor
            in the region; otherwise they behave like the opponent.
        arena (Optional[VertexSet]): Subgame to work in, default all vertices.
        excluded (Optional[VertexSet]): Non-target vertices never allowed to join.
    """
    arena = game.all if arena is None else arena
    owner = Owner.of_player(player)
    existential = (owner, Owner.RANDOM) if positive else (owner,)
    in_arena = arena.mask
    blocked = None if excluded is None else excluded.mask

    ranks: Dict[int, int] = {v: 0 for v in target & arena}
    remaining: Dict[int, int] = {}
    vacuous = []
    layer = list(ranks)
    for v in arena:
        if v in ranks or game.owners[v] in existential:
            continue
        count = sum(1 for u in game.successors[v] if in_arena[u])
        if count == 0 and (blocked is None or not blocked[v]):
            # no successor left inside the arena: vacuously forced
            ranks[v] = 1
            vacuous.append(v)
        remaining[v] = count

    rank = 0
    while True:
        rank += 1
        following = vacuous if rank == 1 else []
        for u in layer:
            for v in game.predecessors[u]:
                if not in_arena[v] or v in ranks:
                    continue
                if blocked is not None and blocked[v]:
                    continue
                if game.owners[v] in existential:
                    ranks[v] = rank
                    following.append(v)
                else:
                    remaining[v] -= 1
                    if remaining[v] == 0:
                        ranks[v] = rank
                        following.append(v)
        if not following:
            break
        layer = following

    region = VertexSet.from_ids(game.n, ranks)
    strategy = {}
    for v, r in ranks.items():
        if r > 0 and game.owners[v] is owner:
            strategy[v] = min(
                u for u in game.successors[v] if u in ranks and ranks[u] < r
            )
    return AttractorResult(region, strategy, ranks)


def sure_attractor(
    game: StochasticGame,
    player: int,
    target: VertexSet,
    arena: Optional[VertexSet] = None,
) -> AttractorResult:
    """
    Least fixpoint of `X -> sure_pre(X) | target`.

    The returned strategy reaches the target within `|V|` steps whatever
    the opponent and the random vertices do.
    """
    return attract(game, player, target, positive=False, arena=arena)


def pos_attractor(
    game: StochasticGame,
    player: int,
    target: VertexSet,
    arena: Optional[VertexSet] = None,
) -> AttractorResult:
    """Least fixpoint of `X -> pos_pre(X) | target`. Its complement is a trap for `player`."""
    return attract(game, player, target, positive=True, arena=arena)
