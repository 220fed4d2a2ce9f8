"""
    The counter-switching strategy for an even largest sure priority `d`.

The machine plays the almost-sure strategy of the conjunction until an odd
priority `p` is seen `N` times in a row among the priorities `>= p` (an
*unlucky* phase). It then switches to the sure attractor to `d` inside the
attractor region `A`, or to the strategy of the closure subgame inside the
rest `B`, and goes back to the almost-sure strategy on the next visit to
`d`. Phase `i` of priority `p` lasts `N_i` observations of priorities `>= p`.
"""
import logging
import warnings
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence

from sasgames.config import ScheduleConfig
from sasgames.constants import PLAYER1
from sasgames.errors import StrategyError
from sasgames.game.core import StochasticGame
from sasgames.game.vertex_set import VertexSet
from sasgames.strategies.base import MemorylessStrategy, StrategyMachine

logger = logging.getLogger(__name__)


class Schedule:
    """
    Phase lengths `i -> N_i`.

    Args:
        config (ScheduleConfig): Geometric or tabulated schedule.
        n_vertices (int): Size of the game, used when `config.n0` is unset.
    """

    def __init__(self, config: Optional[ScheduleConfig] = None, n_vertices: int = 1):
        self.config = (ScheduleConfig() if config is None else config).validate()
        self.n0 = self.config.n0 if self.config.n0 is not None else 4 * max(n_vertices, 1)
        if self.config.kind == "geometric" and self.config.base == 1:
            warnings.warn(
                "constant phase lengths do not make unlucky phases rare", stacklevel=2
            )

    def __call__(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"phase index must be non-negative, got {i}")
        if self.config.kind == "geometric":
            return self.n0 * self.config.base**i
        table = self.config.table
        if i < len(table):
            return table[i]
        return table[-1] * 2 ** (i - len(table) + 1)

    def to_json(self) -> Dict:
        if self.config.kind == "geometric":
            return {"kind": "geometric", "n0": self.n0, "base": self.config.base}
        return {"kind": "table", "table": list(self.config.table)}


class RegisterStrategy(StrategyMachine):
    """
    A memoryless strategy of the register product played on the base game.

    The memory is the register vector; it is updated on every vertex with
    the priorities of the vertex being left.
    """

    def __init__(self, game: StochasticGame, witness):
        super().__init__(game, PLAYER1)
        self.witness = witness
        self.layout = witness.product.layout
        self.registers = self.layout.zeros

    def reset(self):
        self.registers = self.layout.zeros

    def step(self, v: int) -> Optional[int]:
        product = self.witness.product
        pid = product.index.get((v, self.registers))
        if pid is None:
            raise StrategyError(f"no product vertex for ({v}, {self.registers})")
        move = None
        if self.owns(v):
            target = self.witness.strategy.get(pid)
            if target is None:
                raise StrategyError(f"product strategy undefined at ({v}, {self.registers})")
            move = self._checked(v, product.base(target))
        self.registers = self.layout.update(
            self.registers, self.game.omega1[v], self.game.omega2[v]
        )
        return move

    def snapshot(self) -> Hashable:
        return self.registers

    def restore(self, snapshot: Hashable):
        self.registers = snapshot

    @property
    def memory_size(self) -> int:
        return self.layout.grid_size


@dataclass(frozen=True)
class UnluckyEvent:
    """An unlucky phase of priority `priority` ending at play position `step`."""

    step: int
    vertex: int
    priority: int


class CounterStrategy(StrategyMachine):
    """
    Args:
        game (StochasticGame): The node game.
        d (int): Its largest sure priority (even).
        attractor_region (VertexSet): Sure attractor `A` of Player 1 to the
            `d`-vertices inside the almost-sure region.
        attractor (MemorylessStrategy): Attractor moves on `A`.
        sigma_as (StrategyMachine): Almost-sure strategy of the conjunction.
        sub (Optional[StrategyMachine]): Strategy for the closure of `B`,
            on this game's ids.
        sub_region (VertexSet): `B`, the almost-sure region minus `A`.
        schedule (Schedule): Phase lengths.
    """

    def __init__(
        self,
        game: StochasticGame,
        d: int,
        attractor_region: VertexSet,
        attractor: MemorylessStrategy,
        sigma_as: StrategyMachine,
        sub: Optional[StrategyMachine],
        sub_region: VertexSet,
        schedule: Schedule,
    ):
        super().__init__(game, PLAYER1)
        if d % 2:
            raise ValueError(f"counter strategies need an even top priority, got {d}")
        if sub_region and sub is None:
            raise StrategyError("a non-empty closure region needs a strategy")
        self.d = d
        self.attractor_region = attractor_region
        self.attractor = attractor
        self.sigma_as = sigma_as
        self.sub = sub
        self.sub_region = sub_region
        self.schedule = schedule
        self.odd: Sequence[int] = tuple(range(1, d, 2))
        self.reset()

    def reset(self):
        self.sigma_as.reset()
        if self.sub is not None:
            self.sub.reset()
        self.unlucky = False
        self.phase = {p: 0 for p in self.odd}
        self.count = {p: 0 for p in self.odd}
        self.pure = {p: True for p in self.odd}
        self.in_sub = False
        self.position = 0
        self.unlucky_since: Optional[int] = None
        self.mode = "as"
        self.events: List[UnluckyEvent] = []
        self.recoveries: List[int] = []

    def _observe(self, priority: int):
        for p in self.odd:
            if priority >= p and self.count[p] < self.schedule(self.phase[p]):
                self.count[p] += 1
                self.pure[p] = self.pure[p] and priority == p

    def _roll_phases(self, v: int):
        for p in self.odd:
            if self.count[p] < self.schedule(self.phase[p]):
                continue
            if self.pure[p]:
                if not self.unlucky:
                    self.unlucky_since = self.position
                self.unlucky = True
                self.events.append(UnluckyEvent(self.position, v, p))
                logger.debug("unlucky at step %d: %d times priority %d", self.position, self.count[p], p)
            self.phase[p] += 1
            self.count[p] = 0
            self.pure[p] = True

    def step(self, v: int) -> Optional[int]:
        priority = self.game.omega1[v]
        self._observe(priority)

        move_as = self.sigma_as.step(v)
        move_sub = None
        if v in self.sub_region:
            if not self.in_sub:
                self.sub.reset()
            self.in_sub = True
            move_sub = self.sub.step(v)
        else:
            self.in_sub = False

        if priority == self.d:
            if self.unlucky:
                self.recoveries.append(self.position - self.unlucky_since)
            self.unlucky = False
            self.unlucky_since = None
        elif not self.unlucky:
            self._roll_phases(v)

        if not self.unlucky:
            self.mode = "as"
            move = move_as
        elif v in self.sub_region:
            self.mode = "sub"
            move = move_sub
        elif v in self.attractor_region:
            self.mode = "attr"
            move = self.attractor.step(v)
        else:
            raise StrategyError(f"vertex {v} left the almost-sure region")
        self.position += 1
        if self.owns(v):
            return self._checked(v, move)
        return None

    def snapshot(self) -> Hashable:
        return (
            self.unlucky,
            tuple(self.phase[p] for p in self.odd),
            tuple(self.count[p] for p in self.odd),
            tuple(self.pure[p] for p in self.odd),
            self.in_sub,
            self.sigma_as.snapshot(),
            None if self.sub is None else self.sub.snapshot(),
        )

    def restore(self, snapshot: Hashable):
        unlucky, phases, counts, pures, in_sub, as_memory, sub_memory = snapshot
        self.unlucky = unlucky
        self.phase = dict(zip(self.odd, phases))
        self.count = dict(zip(self.odd, counts))
        self.pure = dict(zip(self.odd, pures))
        self.in_sub = in_sub
        self.sigma_as.restore(as_memory)
        if self.sub is not None:
            self.sub.restore(sub_memory)
