"""
    Executable strategies.

A `StrategyMachine` is fed every vertex of the play, in order, and answers
with a move whenever the vertex belongs to its player. Machines expose
`snapshot()` / `restore()` so that finite-memory machines can be explored
exhaustively (tabulated into a `MealyStrategy` or multiplied with a game).
"""
import logging
from abc import ABC, abstractmethod
from collections import deque
from typing import Any, Dict, Hashable, Mapping, Optional, Sequence, Tuple

from sasgames.constants import JSON_KEYS, PLAYER1, SCHEMA_VERSION
from sasgames.errors import BoundExceededError, StrategyError
from sasgames.game.core import Embedding, Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet

logger = logging.getLogger(__name__)


class StrategyMachine(ABC):
    """
    Base class of every strategy.

    Args:
        game (StochasticGame): The game the machine plays in.
        player (int): The player whose vertices the machine moves from.
    """

    def __init__(self, game: StochasticGame, player: int = PLAYER1):
        self.game = game
        self.player = player
        self.owner = Owner.of_player(player)

    def owns(self, v: int) -> bool:
        return self.game.owners[v] is self.owner

    def _checked(self, v: int, u: Optional[int]) -> int:
        if u is None:
            raise StrategyError(f"no move for vertex {v}")
        if u not in self.game.successors[v]:
            raise StrategyError(f"illegal move {v} -> {u}")
        return u

    @abstractmethod
    def reset(self):
        """Return to the initial memory."""

    @abstractmethod
    def step(self, v: int) -> Optional[int]:
        """Consume play vertex `v`; return the move if the machine owns `v`."""

    @abstractmethod
    def snapshot(self) -> Hashable:
        """Hashable image of the current memory."""

    @abstractmethod
    def restore(self, snapshot: Hashable):
        """Go back to a memory returned by `snapshot`."""

    @property
    def memory_size(self) -> Optional[int]:
        """Number of memory states if known, `None` if unbounded or unknown."""
        return None


class MemorylessStrategy(StrategyMachine):
    """
    A fixed successor for each owned vertex.

    Raises:
        StrategyError: If a chosen successor is not an edge of the game.
    """

    def __init__(self, game: StochasticGame, choice: Mapping[int, int], player: int = PLAYER1):
        super().__init__(game, player)
        self.choice: Dict[int, int] = dict(choice)
        for v, u in self.choice.items():
            if not self.owns(v):
                raise StrategyError(f"vertex {v} is not owned by player {player}")
            self._checked(v, u)

    def reset(self):
        pass

    def step(self, v: int) -> Optional[int]:
        if not self.owns(v):
            return None
        return self._checked(v, self.choice.get(v))

    def move(self, v: int) -> int:
        return self._checked(v, self.choice.get(v))

    def snapshot(self) -> Hashable:
        return 0

    def restore(self, snapshot: Hashable):
        pass

    @property
    def memory_size(self) -> int:
        return 1

    def to_json(self) -> Dict[str, Any]:
        return {
            JSON_KEYS.SCHEMA: SCHEMA_VERSION,
            JSON_KEYS.KIND: "memoryless",
            "player": self.player,
            "moves": {str(v): u for v, u in sorted(self.choice.items())},
        }


class MealyStrategy(StrategyMachine):
    """
    Finite-memory strategy given by explicit tables.

    Args:
        memory (Sequence[Hashable]): Memory states.
        initial (Hashable): Initial memory.
        update (Mapping): `(memory, vertex) -> memory` before the next vertex.
        move (Mapping): `(memory, owned vertex) -> successor`.
    """

    def __init__(
        self,
        game: StochasticGame,
        memory: Sequence[Hashable],
        initial: Hashable,
        update: Mapping[Tuple[Hashable, int], Hashable],
        move: Mapping[Tuple[Hashable, int], int],
        player: int = PLAYER1,
    ):
        super().__init__(game, player)
        self.memory = tuple(memory)
        if initial not in self.memory:
            raise StrategyError(f"initial memory {initial!r} is not a memory state")
        self.initial = initial
        self.update_table = dict(update)
        self.move_table = dict(move)
        for (m, v), u in self.move_table.items():
            self._checked(v, u)
        self.current = initial

    def reset(self):
        self.current = self.initial

    def step(self, v: int) -> Optional[int]:
        m = self.current
        u = self._checked(v, self.move_table.get((m, v))) if self.owns(v) else None
        if (m, v) not in self.update_table:
            raise StrategyError(f"no memory update for ({m!r}, {v})")
        self.current = self.update_table[(m, v)]
        return u

    def snapshot(self) -> Hashable:
        return self.current

    def restore(self, snapshot: Hashable):
        self.current = snapshot

    @property
    def memory_size(self) -> int:
        return len(self.memory)

    def to_json(self) -> Dict[str, Any]:
        index = {m: i for i, m in enumerate(self.memory)}
        return {
            JSON_KEYS.SCHEMA: SCHEMA_VERSION,
            JSON_KEYS.KIND: "mealy",
            "player": self.player,
            "memory": len(self.memory),
            "initial": index[self.initial],
            "update": [[index[m], v, index[t]] for (m, v), t in sorted(
                self.update_table.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])
            )],
            "move": [[index[m], v, u] for (m, v), u in sorted(
                self.move_table.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])
            )],
        }


class EmbeddedStrategy(StrategyMachine):
    """Run a machine of a derived game on the parent game's vertex ids."""

    def __init__(self, parent: StochasticGame, inner: StrategyMachine, embedding: Embedding):
        if embedding.parent_n != parent.n or embedding.game is not inner.game:
            raise StrategyError("embedding does not connect the two games")
        super().__init__(parent, inner.player)
        self.inner = inner
        self.embedding = embedding

    def reset(self):
        self.inner.reset()

    def step(self, v: int) -> Optional[int]:
        local = self.embedding.local(v)
        if local is None:
            raise StrategyError(f"vertex {v} is outside the region of this strategy")
        u = self.inner.step(local)
        if u is None:
            return None
        target = self.embedding.origin[u]
        if target is None:
            raise StrategyError(f"strategy moves {v} into a closure sink")
        return self._checked(v, target)

    def snapshot(self) -> Hashable:
        return self.inner.snapshot()

    def restore(self, snapshot: Hashable):
        self.inner.restore(snapshot)

    @property
    def memory_size(self) -> Optional[int]:
        return self.inner.memory_size


class RegionSwitch(StrategyMachine):
    """
    Play a different machine in each region of a partition.

    A region's machine is reset whenever the play enters that region.
    Vertices outside every region get the lowest successor.
    """

    def __init__(
        self,
        game: StochasticGame,
        parts: Sequence[Tuple[VertexSet, StrategyMachine]],
        player: int = PLAYER1,
    ):
        super().__init__(game, player)
        self.parts = [(region, machine) for region, machine in parts if region]
        self.active: Optional[int] = None

    def locate(self, v: int) -> Optional[int]:
        for i, (region, _) in enumerate(self.parts):
            if v in region:
                return i
        return None

    def reset(self):
        self.active = None

    def step(self, v: int) -> Optional[int]:
        i = self.locate(v)
        if i is None:
            self.active = None
            return min(self.game.successors[v]) if self.owns(v) else None
        machine = self.parts[i][1]
        if i != self.active:
            machine.reset()
            self.active = i
        u = machine.step(v)
        if self.owns(v):
            return self._checked(v, u)
        return None

    def snapshot(self) -> Hashable:
        if self.active is None:
            return None
        return (self.active, self.parts[self.active][1].snapshot())

    def restore(self, snapshot: Hashable):
        if snapshot is None:
            self.active = None
            return
        self.active, inner = snapshot
        self.parts[self.active][1].restore(inner)


def explore_memory(
    machine: StrategyMachine,
    region: VertexSet,
    max_memory: int = 4096,
) -> MealyStrategy:
    """
    Tabulate a finite-memory machine on `region` into a `MealyStrategy`.

    Raises:
        BoundExceededError: If more than `max_memory` memory states are reachable.
    """
    machine.reset()
    initial = machine.snapshot()
    index = {initial: 0}
    queue = deque([initial])
    update, move = {}, {}
    while queue:
        s = queue.popleft()
        for v in region:
            machine.restore(s)
            u = machine.step(v)
            t = machine.snapshot()
            if t not in index:
                if len(index) >= max_memory:
                    raise BoundExceededError("memory states", len(index) + 1, max_memory)
                index[t] = len(index)
                queue.append(t)
            update[(index[s], v)] = index[t]
            if u is not None:
                move[(index[s], v)] = u
    machine.reset()
    return MealyStrategy(
        machine.game, tuple(range(len(index))), 0, update, move, machine.player
    )


def strategy_from_json(game: StochasticGame, data: Mapping[str, Any]) -> StrategyMachine:
    """
    Rebuild a memoryless or Mealy strategy from its JSON form.

    Raises:
        StrategyError: If the document is not a finite strategy of this game.
    """
    kind = data.get(JSON_KEYS.KIND)
    player = data.get("player", PLAYER1)
    try:
        if kind == "memoryless":
            return MemorylessStrategy(
                game, {int(v): int(u) for v, u in data["moves"].items()}, player
            )
        if kind == "mealy":
            return MealyStrategy(
                game,
                tuple(range(int(data["memory"]))),
                int(data["initial"]),
                {(m, v): t for m, v, t in data["update"]},
                {(m, v): u for m, v, u in data["move"]},
                player,
            )
    except (KeyError, TypeError, ValueError) as e:
        raise StrategyError(f"malformed strategy document: {e}") from e
    raise StrategyError(f"cannot load a strategy of kind '{kind}'")
