"""
    Decide whether one fixed finite-memory Player-1 strategy wins.

The game is multiplied with the memory of the strategy; in the product
Player 1 has no choice left. The sure condition fails iff some reachable
cycle has an odd largest sure priority, whoever resolves the random
vertices. The almost-sure condition fails iff Player 2 reaches, with
positive probability, an end component whose largest almost-sure
priority is odd.
"""
import logging
from collections import deque
from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from sasgames.errors import BoundExceededError
from sasgames.game.core import Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.graph import is_nontrivial, strongly_connected_components
from sasgames.solvers.mdp import mdp_pos_parity
from sasgames.strategies.base import StrategyMachine
from sasgames.verdict import Verdict

logger = logging.getLogger(__name__)


def strategy_product(
    game: StochasticGame,
    sigma1: StrategyMachine,
    claimed: VertexSet,
    max_states: int = 4096,
) -> Tuple[StochasticGame, List[Tuple[int, Hashable]]]:
    """
    Product of `game` with the memory of `sigma1`, from `(v, initial memory)`
    for every `v` in `claimed`. Player-1 vertices become random vertices
    following the strategy.

    Raises:
        StrategyError: If the strategy has no legal move somewhere.
        BoundExceededError: If more than `max_states` states are reachable.
    """
    sigma1.reset()
    initial = sigma1.snapshot()
    index: Dict[Tuple[int, Hashable], int] = {}
    order: List[Tuple[int, Hashable]] = []
    queue = deque()

    def visit(key) -> int:
        if key not in index:
            if len(order) >= max_states:
                raise BoundExceededError("strategy product states", len(order) + 1, max_states)
            index[key] = len(order)
            order.append(key)
            queue.append(key)
        return index[key]

    for v in claimed:
        visit((v, initial))
    owners, successors, probabilities = {}, {}, {}
    while queue:
        key = queue.popleft()
        v, memory = key
        sigma1.restore(memory)
        move = sigma1.step(v)
        after = sigma1.snapshot()
        i = index[key]
        if game.owners[v] is Owner.P1:
            owners[i] = Owner.RANDOM
            successors[i] = (visit((move, after)),)
            probabilities[i] = (Fraction(1),)
        else:
            owners[i] = game.owners[v]
            successors[i] = tuple(visit((u, after)) for u in game.successors[v])
            probabilities[i] = game.probabilities[v]
    sigma1.reset()
    n = len(order)
    product = StochasticGame(
        tuple(owners[i] for i in range(n)),
        tuple(successors[i] for i in range(n)),
        tuple(probabilities[i] for i in range(n)),
        tuple(game.omega1[v] for v, _ in order),
        tuple(game.omega2[v] for v, _ in order),
        tuple(game.labels[v] for v, _ in order),
    )
    return product, order


def _odd_cycle(product: StochasticGame) -> Optional[int]:
    """An odd sure priority that is the largest on some cycle, if any."""
    for p in sorted({q for q in product.omega1 if q % 2}, reverse=True):
        members = [v for v in range(product.n) if product.omega1[v] <= p]
        for component in strongly_connected_components(product.successors, members):
            if is_nontrivial(component, product.successors) and any(
                product.omega1[v] == p for v in component
            ):
                return p
    return None


def check_fixed_strategy_sas(
    game: StochasticGame,
    sigma1: StrategyMachine,
    claimed: VertexSet,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    max_states: int = 4096,
) -> Verdict:
    """
    Does `sigma1` win sure `Parity(omega1)` and almost-sure `Parity(omega2)`
    from every vertex of `claimed`?

    Raises:
        StrategyError: If the strategy is partial on the reachable part.
        BoundExceededError: If the product exceeds `max_states`.
    """
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    if not claimed:
        return Verdict(True)
    product, order = strategy_product(game, sigma1, claimed, max_states)
    logger.debug("strategy product: %d states", product.n)
    p = _odd_cycle(product)
    if p is not None:
        return Verdict(False, f"sure condition: a reachable cycle has largest priority {p}")
    spoiled = mdp_pos_parity(product, [q + 1 for q in product.omega2])
    if spoiled:
        v, _ = order[next(iter(spoiled))]
        return Verdict(
            False, f"almost-sure condition: Player 2 wins with positive probability from vertex {v}"
        )
    return Verdict(True)
