"""
    Strategy synthesis from a derivation trace.

Every function walks the trace bottom-up and composes the strategies of
the children with the attractor strategies recorded at each node:

- even node without a second child: the counter strategy (general case),
  a finite round-robin machine (Büchi second condition) or the almost-sure
  strategy itself (co-Büchi first condition).
- even node with a second child: the second child's strategy.
- odd node: the first child's strategy on its winning region, the sure
  attractor to it in the middle, the second child's strategy elsewhere.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Hashable, List, NamedTuple, Optional, Sequence

from sasgames.config import OracleConfig, ScheduleConfig, SolverConfig
from sasgames.constants import PLAYER1, PLAYER2
from sasgames.errors import BoundExceededError, PreconditionError, StrategyError
from sasgames.game.core import Owner, StochasticGame, fix_strategy, memoryless_choices
from sasgames.game.vertex_set import VertexSet
from sasgames.solvers.almost_sure import solve_as_parity
from sasgames.solvers.sas import (
    DerivationTrace,
    TraceNode,
    _conjunction_witness,
    solve_sas,
)
from sasgames.strategies.base import (
    EmbeddedStrategy,
    MealyStrategy,
    MemorylessStrategy,
    RegionSwitch,
    StrategyMachine,
    explore_memory,
)
from sasgames.strategies.counter import CounterStrategy, RegisterStrategy, Schedule

logger = logging.getLogger(__name__)

# Büchi machines use at most this many memory states per (vertex, sure priority).
BUCHI_MEMORY_FACTOR = 5


def _trace_for(
    game: StochasticGame,
    omega1: Optional[Sequence[int]],
    omega2: Optional[Sequence[int]],
    trace: Optional[DerivationTrace],
) -> DerivationTrace:
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    if trace is None:
        return solve_sas(game).trace
    if trace.game != game:
        raise StrategyError("trace does not belong to this game")
    return trace


def _embed(parent: TraceNode, child: TraceNode, machine: StrategyMachine) -> StrategyMachine:
    return EmbeddedStrategy(parent.game, machine, child.embedding)


def _lift_choice(child: TraceNode, choice: Dict[int, int]) -> Dict[int, int]:
    origin = child.embedding.origin
    return {origin[v]: origin[u] for v, u in choice.items() if origin[v] is not None}


def _owned(game: StochasticGame, choice: Dict[int, int], player: int) -> Dict[int, int]:
    owner = Owner.of_player(player)
    return {v: u for v, u in choice.items() if game.owners[v] is owner}


def _odd_parts(node: TraceNode, first, second) -> RegionSwitch:
    """Three regions of an odd node: the first child's winning part, the
    sure attractor to it, and the second child's winning part."""
    won = node.first.embedding.lift(node.first.w1)
    middle = node.second_attractor.region - won
    attractor = MemorylessStrategy(
        node.game, _owned(node.game, node.second_attractor.strategy, PLAYER1)
    )
    parts = [
        (won, _embed(node, node.first, first)),
        (middle, attractor),
        (node.second.embedding.lift(node.second.w1), _embed(node, node.second, second)),
    ]
    return RegionSwitch(node.game, parts)


# 1. General case: counter strategies


def synth_counter_strategy(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    trace: Optional[DerivationTrace] = None,
    schedule: Optional[ScheduleConfig] = None,
) -> StrategyMachine:
    """
    Sure-almost-sure winning strategy of Player 1 on `W1`.

    Args:
        game (StochasticGame): The game.
        omega1, omega2: Optional priority overrides.
        trace (Optional[DerivationTrace]): A trace of `solve_sas` on the
            same game; solved here when omitted.
        schedule (Optional[ScheduleConfig]): Phase lengths of every counter
            machine; defaults to `4|V| * 2**i`.

    Returns:
        StrategyMachine: A machine playing on the vertex ids of `game`. Its
        moves are defined while the play stays in `W1`.

    Raises:
        StrategyError: If `trace` was computed for another game.
    """
    trace = _trace_for(game, omega1, omega2, trace)
    phases = Schedule(schedule, trace.game.n)
    return _CounterBuilder(phases).build(trace.root)


class _CounterBuilder:
    def __init__(self, schedule: Schedule):
        self.schedule = schedule

    def build(self, node: TraceNode) -> StrategyMachine:
        game = node.game
        if node.kind == "base":
            return MemorylessStrategy(game, {})
        if node.kind == "odd":
            if node.second is None:
                return MemorylessStrategy(game, {})
            return _odd_parts(node, self.build(node.first), self.build(node.second))
        if node.second is not None:
            return _embed(node, node.second, self.build(node.second))
        sigma_as = RegisterStrategy(game, node.witness)
        if not any(game.omega1[v] % 2 for v in node.w_as):
            return sigma_as
        attractor = MemorylessStrategy(game, _owned(game, node.attractor.strategy, PLAYER1))
        sub_region = node.first.embedding.lift(node.first.game.real)
        sub = _embed(node, node.first, self.build(node.first)) if sub_region else None
        return CounterStrategy(
            game,
            node.d,
            node.attractor.region,
            attractor,
            sigma_as,
            sub,
            sub_region,
            self.schedule,
        )


# 2. Sure co-Büchi and almost-sure parity: memoryless


def synth_memoryless_cobuchi(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    trace: Optional[DerivationTrace] = None,
) -> MemorylessStrategy:
    """
    Memoryless winning strategy on `W1` when every sure priority is 0 or 1.

    Raises:
        PreconditionError: If a sure priority exceeds 1.
    """
    trace = _trace_for(game, omega1, omega2, trace)
    game = trace.game
    if game.d1 > 1:
        raise PreconditionError(f"sure priorities must be 0 or 1, found {game.d1}")
    choice = _cobuchi(trace.root)
    wins = {v: u for v, u in choice.items() if v in trace.root.w1}
    return MemorylessStrategy(game, _owned(game, wins, PLAYER1))


def _cobuchi(node: TraceNode) -> Dict[int, int]:
    game = node.game
    if node.kind == "base":
        return {}
    if node.kind == "even":
        if node.second is not None:
            return _lift_choice(node.second, _cobuchi(node.second))
        # only priority 0 is left for the sure condition
        result = solve_as_parity(game, game.omega2, arena=node.w_as)
        return _owned(game, result.strategy, PLAYER1)
    if node.second is None:
        return {}
    won = node.first.embedding.lift(node.first.w1)
    choice = _lift_choice(node.first, _cobuchi(node.first))
    middle = node.second_attractor.region - won
    choice.update(
        (v, u) for v, u in node.second_attractor.strategy.items() if v in middle
    )
    choice.update(_lift_choice(node.second, _cobuchi(node.second)))
    return choice


# 3. Almost-sure Büchi: finite memory


class BuchiRoundMachine(StrategyMachine):
    """
    Even node of the Büchi construction.

    Inside `B` play the closure strategy (reset on entry). Inside `A` play
    the sure attractor to the `d`-vertices; on reaching one, play `rounds`
    steps of a memoryless almost-sure Büchi strategy.
    """

    def __init__(
        self,
        game: StochasticGame,
        d: int,
        attractor: MemorylessStrategy,
        buchi: MemorylessStrategy,
        sub: Optional[StrategyMachine],
        sub_region: VertexSet,
        rounds: int,
    ):
        super().__init__(game, PLAYER1)
        self.d = d
        self.attractor = attractor
        self.buchi = buchi
        self.sub = sub
        self.sub_region = sub_region
        self.rounds = rounds
        self.memory: tuple = ("attr",)

    def reset(self):
        self.memory = ("attr",)
        if self.sub is not None:
            self.sub.reset()

    def step(self, v: int) -> Optional[int]:
        mode = self.memory
        if mode[0] == "round":
            move = self.buchi.step(v)
            left = mode[1] - 1
            self.memory = ("round", left) if left > 0 else ("attr",)
        elif v in self.sub_region:
            if mode[0] != "sub":
                self.sub.reset()
            move = self.sub.step(v)
            self.memory = ("sub", self.sub.snapshot())
        elif self.game.omega1[v] == self.d:
            move = self.buchi.step(v)
            self.memory = ("round", self.rounds) if self.rounds > 1 else ("attr",)
        else:
            move = self.attractor.step(v)
            self.memory = ("attr",)
        return self._checked(v, move) if self.owns(v) else None

    def snapshot(self) -> Hashable:
        return self.memory

    def restore(self, snapshot: Hashable):
        self.memory = snapshot
        if snapshot[0] == "sub":
            self.sub.restore(snapshot[1])


def synth_finite_buchi(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    trace: Optional[DerivationTrace] = None,
    max_memory: int = 1 << 16,
) -> MealyStrategy:
    """
    Finite-memory winning strategy on `W1` when the almost-sure condition
    is Büchi (priorities 1 and 2 only).

    The machine is built on the trace and tabulated on `W1`; its memory is
    at most `BUCHI_MEMORY_FACTOR * |V| * d1` states.

    Raises:
        PreconditionError: If an almost-sure priority is not 1 or 2.
    """
    trace = _trace_for(game, omega1, omega2, trace)
    game = trace.game
    bad = [v for v in game.real if game.omega2[v] not in (1, 2)]
    if bad:
        raise PreconditionError("almost-sure priorities must be 1 or 2", vertex=bad[0])
    if game.d1 <= 1:
        machine = synth_memoryless_cobuchi(game, trace=trace)
    else:
        machine = _buchi(trace.root)
    mealy = explore_memory(machine, trace.root.w1, max_memory)
    logger.info(
        "Büchi strategy with %d memory states (bound %d)",
        mealy.memory_size,
        buchi_memory_bound(game.n, game.d1),
    )
    return mealy


def buchi_memory_bound(n: int, d1: int) -> int:
    return max(1, BUCHI_MEMORY_FACTOR * n * d1)


def _buchi(node: TraceNode) -> StrategyMachine:
    game = node.game
    if node.kind == "base":
        return MemorylessStrategy(game, {})
    if node.kind == "odd":
        if node.second is None:
            return MemorylessStrategy(game, {})
        return _odd_parts(node, _buchi(node.first), _buchi(node.second))
    if node.second is not None:
        return _embed(node, node.second, _buchi(node.second))
    result = solve_as_parity(game, game.omega2, arena=node.w_as)
    buchi = MemorylessStrategy(game, _owned(game, result.strategy, PLAYER1))
    if node.d == 0:
        return buchi
    attractor = MemorylessStrategy(game, _owned(game, node.attractor.strategy, PLAYER1))
    sub_region = node.first.embedding.lift(node.first.game.real)
    sub = _embed(node, node.first, _buchi(node.first)) if sub_region else None
    return BuchiRoundMachine(
        game, node.d, attractor, buchi, sub, sub_region, max(len(node.w1), 1)
    )


# 4. Spoiling strategies of Player 2


class SpoilingResult(NamedTuple):
    """
    Attributes:
        machine (StrategyMachine): Composed spoiling strategy on `W2`.
        memoryless (Optional[MemorylessStrategy]): A uniform memoryless
            spoiling strategy, when the enumeration bound allows a search.
    """

    machine: StrategyMachine
    memoryless: Optional[MemorylessStrategy]


def _assignments(game: StochasticGame, player: int, free: VertexSet):
    """Memoryless choices varying on `free`, lowest successor elsewhere."""
    owned, options = memoryless_choices(game, player)
    axes = [opts if v in free else opts[:1] for v, opts in zip(owned, options)]
    for combo in itertools.product(*axes):
        yield dict(zip(owned, combo))


def _count_assignments(game: StochasticGame, player: int, free: VertexSet) -> int:
    owned, options = memoryless_choices(game, player)
    total = 1
    for v, opts in zip(owned, options):
        if v in free:
            total *= len(opts)
    return total


def _as_spoiler(node: TraceNode, outside: VertexSet, config: OracleConfig) -> MemorylessStrategy:
    """Memoryless Player-2 strategy keeping every vertex of `outside` out of
    the almost-sure region of the conjunction."""
    game = node.game
    total = _count_assignments(game, PLAYER2, outside)
    if total > config.max_strategies:
        raise BoundExceededError("memoryless spoilers", total, config.max_strategies)
    for choice in _assignments(game, PLAYER2, outside):
        fixed = fix_strategy(game, PLAYER2, choice)
        if _conjunction_witness(fixed).w_as.isdisjoint(outside):
            return MemorylessStrategy(game, choice, PLAYER2)
    raise StrategyError("no memoryless strategy spoils the almost-sure condition")


class _SpoilerBuilder:
    def __init__(self, config: OracleConfig):
        self.config = config

    def build(self, node: TraceNode) -> StrategyMachine:
        game = node.game
        if node.kind == "base" or not node.w2:
            return MemorylessStrategy(game, {}, PLAYER2)
        if node.kind == "odd":
            if node.second is not None:
                return _embed(node, node.second, self.build(node.second))
            attr = node.attractor
            choice = _owned(game, attr.strategy, PLAYER2)
            choice.update(
                (v, min(game.successors[v]))
                for v in attr.region
                if v not in choice and game.owners[v] is Owner.P2
            )
            trap = node.first.embedding.lift(node.first.game.real)
            return RegionSwitch(
                game,
                [
                    (attr.region & game.real, MemorylessStrategy(game, choice, PLAYER2)),
                    (trap, _embed(node, node.first, self.build(node.first))),
                ],
                PLAYER2,
            )
        outside = game.real - node.w_as
        parts = []
        if outside:
            parts.append((outside, _as_spoiler(node, outside, self.config)))
        if node.second is not None:
            lost = node.first.embedding.lift(node.first.w2)
            spoiled = node.second_attractor
            parts.append((lost, _embed(node, node.first, self.build(node.first))))
            parts.append(
                (
                    (spoiled.region - lost) & game.real,
                    MemorylessStrategy(game, _owned(game, spoiled.strategy, PLAYER2), PLAYER2),
                )
            )
            parts.append(
                (
                    node.second.embedding.lift(node.second.w2),
                    _embed(node, node.second, self.build(node.second)),
                )
            )
        return RegionSwitch(game, parts, PLAYER2)


def find_memoryless_spoiler(
    game: StochasticGame,
    w2: VertexSet,
    config: Optional[OracleConfig] = None,
) -> Optional[MemorylessStrategy]:
    """
    Search for a memoryless Player-2 strategy under which Player 1 wins
    from no vertex of `w2`.

    Raises:
        BoundExceededError: If there are more than `config.max_strategies`
            candidates.
    """
    config = OracleConfig() if config is None else config
    total = _count_assignments(game, PLAYER2, game.all)
    if total > config.max_strategies:
        raise BoundExceededError("memoryless spoilers", total, config.max_strategies)
    check = lambda choice: solve_sas(
        fix_strategy(game, PLAYER2, choice), config=SolverConfig(memoize=False)
    ).w1.isdisjoint(w2)
    candidates: List[Dict[int, int]] = list(_assignments(game, PLAYER2, game.all))
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        for choice, ok in zip(candidates, pool.map(check, candidates)):
            if ok:
                return MemorylessStrategy(game, choice, PLAYER2)
    return None


def synth_spoiling(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
    trace: Optional[DerivationTrace] = None,
    config: Optional[OracleConfig] = None,
) -> SpoilingResult:
    """
    Spoiling strategy of Player 2 on `W2`.

    The composed machine follows the case split of the recursion:
    positive-attractor moves toward the losing part of a closure child,
    the spoilers of the children on their regions, and a memoryless
    spoiler of the almost-sure conjunction outside its region. Small games
    also get a uniform memoryless spoiler found by enumeration.
    """
    config = OracleConfig() if config is None else config
    trace = _trace_for(game, omega1, omega2, trace)
    machine = _SpoilerBuilder(config).build(trace.root)
    memoryless = None
    if trace.root.w2 and _count_assignments(trace.game, PLAYER2, trace.game.all) <= config.max_strategies:
        memoryless = find_memoryless_spoiler(trace.game, trace.root.w2, config)
    return SpoilingResult(machine, memoryless)
