"""
    Sure-almost-sure solver: Player 1 must satisfy `Parity(omega1)` on every
    outcome and `Parity(omega2)` with probability 1.

The recursion splits on the parity of the largest sure priority `d`:

- `d` even: restrict to the almost-sure region of the conjunction, attract
  to the `d`-vertices, solve the closure of the rest, and if Player 2 wins
  something there, remove its positive attractor and solve again.
- `d` odd: remove Player 2's positive attractor to the `d`-vertices, solve
  the remaining trap, add Player 1's sure attractor to what it wins there
  and to the sinks, and unless that secures no vertex, solve the closure of
  the rest.

Every node of the recursion is kept in a `DerivationTrace`, which strategy
synthesis and certificate generation read back.
"""
import hashlib
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, NamedTuple, Optional, Sequence, Tuple

from sasgames.automata.product import ProductGame, lift_conjunction_game
from sasgames.config import SolverConfig
from sasgames.constants import PLAYER1, PLAYER2
from sasgames.game.core import (
    Embedding,
    StochasticGame,
    restrict,
    subgame_closure,
)
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.solvers.attractors import AttractorResult, pos_attractor, sure_attractor

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AsWitness:
    """
    Almost-sure winning data for the conjunction of both conditions.

    Attributes:
        product (ProductGame): The register product of the game.
        region (VertexSet): Almost-sure region of the product.
        strategy (Dict[int, int]): Memoryless product strategy on `region`.
        w_as (VertexSet): Base vertices `v` with `(v, 0...0)` in `region`.
    """

    product: ProductGame
    region: VertexSet
    strategy: Dict[int, int]
    w_as: VertexSet


def _conjunction_witness(game: StochasticGame) -> AsWitness:
    product = lift_conjunction_game(game)
    result = solve_as_parity(product.game)
    w_as = VertexSet.from_ids(
        game.n, (v for v in range(game.n) if product.initial(v) in result.region)
    )
    return AsWitness(product, result.region, result.strategy, w_as)


_memoized_witness = lru_cache(maxsize=256)(_conjunction_witness)


def conjunction_witness(game: StochasticGame, memoize: bool = True) -> AsWitness:
    """Almost-sure region of `Parity(omega1) & Parity(omega2)` through the register product."""
    return _memoized_witness(game) if memoize else _conjunction_witness(game)


@dataclass(frozen=True, eq=False)
class TraceNode:
    """
    One call of the recursion.

    Attributes:
        embedding (Embedding): The node's game and the id of each of its
            vertices in the parent node's game (`None` for fresh sinks).
        kind (str): `"base"`, `"even"` or `"odd"`.
        d (int): Largest sure priority of the node's game.
        w1 (VertexSet): Player-1 winning vertices (no sinks).
        w2 (VertexSet): Player-2 winning vertices (no sinks).
        z (Optional[VertexSet]): The `d`-vertices considered.
        attractor (Optional[AttractorResult]): Player 1's sure attractor to
            `z` inside `w_as` (even) or Player 2's positive attractor (odd).
        first (Optional[TraceNode]): Closure child (even) or trap child (odd).
        second_attractor (Optional[AttractorResult]): Player 2's positive
            attractor to the first child's losing part (even) or Player 1's
            sure attractor to its winning part and the sinks (odd).
        second (Optional[TraceNode]): The child solved after removing
            `second_attractor`.
        witness (Optional[AsWitness]): Conjunction data of even nodes.
    """

    embedding: Embedding
    kind: str
    d: int
    w1: VertexSet
    w2: VertexSet
    z: Optional[VertexSet] = None
    attractor: Optional[AttractorResult] = None
    first: Optional["TraceNode"] = None
    second_attractor: Optional[AttractorResult] = None
    second: Optional["TraceNode"] = None
    witness: Optional[AsWitness] = None

    @property
    def game(self) -> StochasticGame:
        return self.embedding.game

    @property
    def w_as(self) -> Optional[VertexSet]:
        return None if self.witness is None else self.witness.w_as

    def to_json(self) -> Dict[str, Any]:
        region = lambda s: None if s is None else s.to_list()
        attr = lambda a: None if a is None else a.region.to_list()
        child = lambda c: None if c is None else c.to_json()
        return {
            "kind": self.kind,
            "d": self.d,
            "game": self.game.digest(),
            "n": self.game.n,
            "origin": list(self.embedding.origin),
            "winning": self.w1.to_list(),
            "losing": self.w2.to_list(),
            "z": region(self.z),
            "w_as": region(self.w_as),
            "attractor": attr(self.attractor),
            "second_attractor": attr(self.second_attractor),
            "first": child(self.first),
            "second": child(self.second),
        }


@dataclass(frozen=True, eq=False)
class DerivationTrace:
    root: TraceNode

    @property
    def game(self) -> StochasticGame:
        return self.root.game

    def to_json(self) -> Dict[str, Any]:
        return self.root.to_json()

    def digest(self) -> str:
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def nodes(self):
        """All nodes, pre-order."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for c in (node.second, node.first):
                if c is not None:
                    stack.append(c)


class SasResult(NamedTuple):
    w1: VertexSet
    w2: VertexSet
    trace: DerivationTrace


def _measure(game: StochasticGame) -> Tuple[int, int]:
    return (game.d1, len(game.real))


class _SasSolver:
    def __init__(self, config: SolverConfig):
        self.config = config

    def child(self, parent: StochasticGame, embedding: Embedding) -> TraceNode:
        if self.config.check_measure and not _measure(embedding.game) < _measure(parent):
            raise AssertionError(
                f"recursion measure did not decrease: {_measure(parent)} -> "
                f"{_measure(embedding.game)}"
            )
        return self.node(embedding)

    def node(self, embedding: Embedding) -> TraceNode:
        game = embedding.game
        real = game.real
        empty = VertexSet.empty(game.n)
        if not real:
            return TraceNode(embedding, "base", game.d1, empty, empty)
        d = game.d1
        if d % 2 == 0:
            return self.even(embedding, d)
        return self.odd(embedding, d)

    def even(self, embedding: Embedding, d: int) -> TraceNode:
        game = embedding.game
        witness = conjunction_witness(game, self.config.memoize)
        w_as = witness.w_as
        z = game.priority_set(game.omega1, d, w_as)
        attr = sure_attractor(game, PLAYER1, z, arena=w_as)
        logger.debug(
            "even node d=%d: |V|=%d |W_AS|=%d |Z|=%d |A|=%d",
            d, game.n, len(w_as), len(z), len(attr.region),
        )
        closure = subgame_closure(game, w_as - attr.region)
        first = self.child(game, closure)
        lost = closure.lift(first.w2)
        outside = game.real - w_as
        if not lost:
            return TraceNode(
                embedding, "even", d, w_as & game.real, outside,
                z=z, attractor=attr, first=first, witness=witness,
            )
        spoiled = pos_attractor(game, PLAYER2, lost, arena=w_as)
        rest = restrict(game, w_as - spoiled.region)
        second = self.child(game, rest)
        return TraceNode(
            embedding,
            "even",
            d,
            rest.lift(second.w1),
            rest.lift(second.w2) | (spoiled.region & game.real) | outside,
            z=z,
            attractor=attr,
            first=first,
            second_attractor=spoiled,
            second=second,
            witness=witness,
        )

    def odd(self, embedding: Embedding, d: int) -> TraceNode:
        game = embedding.game
        z = game.priority_set(game.omega1, d)
        attr = pos_attractor(game, PLAYER2, z)
        logger.debug(
            "odd node d=%d: |V|=%d |Z|=%d |A|=%d", d, game.n, len(z), len(attr.region)
        )
        trap = restrict(game, game.all - attr.region)
        first = self.child(game, trap)
        won = trap.lift(first.w1)
        secured = sure_attractor(game, PLAYER1, won | game.sinks)
        # with no winning trap part, sinks alone may still secure real vertices
        if not secured.region & game.real:
            return TraceNode(
                embedding, "odd", d, VertexSet.empty(game.n), game.real,
                z=z, attractor=attr, first=first,
            )
        closure = subgame_closure(game, game.all - secured.region)
        second = self.child(game, closure)
        return TraceNode(
            embedding,
            "odd",
            d,
            (secured.region & game.real) | closure.lift(second.w1),
            closure.lift(second.w2),
            z=z,
            attractor=attr,
            first=first,
            second_attractor=secured,
            second=second,
        )


def solve_sas(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    config: Optional[SolverConfig] = None,
) -> SasResult:
    """
    Sure-almost-sure winning regions.

    Args:
        game (StochasticGame): The game.
        omega1 (Optional[Sequence[int]]): Sure priorities, default `game.omega1`.
        omega2 (Optional[Sequence[int]]): Almost-sure priorities, default `game.omega2`.
        config (Optional[SolverConfig]): Memoization and runtime checks.

    Returns:
        SasResult: `(w1, w2, trace)`; `w1` and `w2` partition the non-sink
        vertices of `game`.
    """
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    config = SolverConfig() if config is None else config
    root = Embedding(game, tuple(range(game.n)), game.n)
    node = _SasSolver(config).node(root)
    logger.info(
        "solved game with %d vertices: |W1|=%d |W2|=%d", game.n, len(node.w1), len(node.w2)
    )
    return SasResult(node.w1, node.w2, DerivationTrace(node))
