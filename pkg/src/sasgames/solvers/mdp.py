"""
    Qualitative analysis of single-controller games (MDPs and Markov chains).

The controller is whichever player owns vertices; a game owned only by
random vertices is a Markov chain. Parity objectives are decided through
winning end components: an end component is winning when it contains a
sub-end-component whose largest priority is even.
"""
import logging
from typing import List, Optional, Sequence

from sasgames.constants import PLAYER1, PLAYER2
from sasgames.errors import PreconditionError
from sasgames.game.core import Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.almost_sure import as_reach
from sasgames.solvers.graph import backward_reachable, strongly_connected_components

logger = logging.getLogger(__name__)

MecList = List[VertexSet]


def controller(game: StochasticGame, region: Optional[VertexSet] = None) -> Optional[int]:
    """
    The single player owning vertices of `region`, or `None` for a Markov chain.

    Raises:
        PreconditionError: If both players own vertices of `region`.
    """
    region = game.all if region is None else region
    found = {game.owners[v] for v in region} - {Owner.RANDOM}
    if len(found) > 1:
        raise PreconditionError("game has two controllers")
    if not found:
        return None
    return PLAYER1 if Owner.P1 in found else PLAYER2


def _prune(game: StochasticGame, component: List[int]) -> List[int]:
    """Drop random vertices that leak and controller vertices that cannot stay, until stable."""
    members = set(component)
    changed = True
    while changed:
        changed = False
        for v in list(members):
            succ = game.successors[v]
            if game.owners[v] is Owner.RANDOM:
                keep = all(u in members for u in succ)
            else:
                keep = any(u in members for u in succ)
            if not keep:
                members.discard(v)
                changed = True
    return sorted(members)


def mec_decomposition(
    game: StochasticGame, region: Optional[VertexSet] = None
) -> MecList:
    """
    Maximal end components of a single-controller game inside `region`.

    Returns:
        MecList: Pairwise disjoint end components, ordered by smallest id.

    Raises:
        PreconditionError: If both players own vertices of `region`.
    """
    region = game.all if region is None else region
    controller(game, region)
    candidates = region.to_list()
    while True:
        components = strongly_connected_components(game.successors, candidates)
        pruned = [_prune(game, c) for c in components]
        if all(len(p) == len(c) for p, c in zip(pruned, components)):
            return [VertexSet.from_ids(game.n, c) for c in components]
        candidates = [v for p in pruned for v in p]


def winning_end_components(
    game: StochasticGame,
    omega: Sequence[int],
    region: Optional[VertexSet] = None,
) -> VertexSet:
    """Union of the end components whose largest priority is even."""
    good = VertexSet.empty(game.n)
    stack = mec_decomposition(game, region)
    while stack:
        component = stack.pop()
        top = max(omega[v] for v in component)
        if top % 2 == 0:
            good = good | component
            continue
        rest = component - game.priority_set(omega, top)
        if rest:
            stack.extend(mec_decomposition(game, rest))
    return good


def mdp_as_parity(
    game: StochasticGame,
    omega: Optional[Sequence[int]] = None,
    region: Optional[VertexSet] = None,
) -> VertexSet:
    """Vertices from which the controller wins `Parity(omega)` with probability 1."""
    omega = game.omega1 if omega is None else omega
    region = game.all if region is None else region
    player = controller(game, region) or PLAYER1
    good = winning_end_components(game, omega, region)
    return as_reach(game, player, good, arena=region).region


def mdp_pos_parity(
    game: StochasticGame,
    omega: Optional[Sequence[int]] = None,
    region: Optional[VertexSet] = None,
) -> VertexSet:
    """Vertices from which the controller wins `Parity(omega)` with positive probability."""
    omega = game.omega1 if omega is None else omega
    region = game.all if region is None else region
    controller(game, region)
    good = winning_end_components(game, omega, region)
    return VertexSet.from_ids(
        game.n, backward_reachable(game.predecessors, good, region.mask)
    )
