"""
    Seeded simulation of a game under fixed strategies.
"""
import copy
import hashlib
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Union

import numpy as np

from sasgames.constants import PLAYER2
from sasgames.errors import StrategyError
from sasgames.game.core import Owner, StochasticGame
from sasgames.strategies.base import StrategyMachine

logger = logging.getLogger(__name__)

# Resolves a random vertex to one of its successors (directed simulation).
Resolver = Callable[[int], int]
Adversary = Union[str, StrategyMachine, None]

_SAMPLE_BITS = 62


@dataclass
class SimulationStats:
    """
    Summary of one simulated run.

    Attributes:
        seed (int): Seed of the generator.
        steps (int): Number of simulated steps.
        digest (str): sha256 of the visited vertex ids.
        visits1 (Dict[int, int]): Visits per sure priority.
        visits2 (Dict[int, int]): Visits per almost-sure priority.
        unlucky (List[int]): Play positions of unlucky phases of the top
            counter machine, if any.
        recovery_steps (List[int]): For each unlucky phase, steps until the
            top sure priority was visited again.
        trace (Optional[List[int]]): The visited vertices, when kept.
    """

    seed: int
    steps: int
    digest: str
    visits1: Dict[int, int] = field(default_factory=dict)
    visits2: Dict[int, int] = field(default_factory=dict)
    unlucky: List[int] = field(default_factory=list)
    recovery_steps: List[int] = field(default_factory=list)
    trace: Optional[List[int]] = None

    def to_json(self) -> Dict:
        return {
            "seed": self.seed,
            "steps": self.steps,
            "digest": self.digest,
            "visits1": {str(p): c for p, c in sorted(self.visits1.items())},
            "visits2": {str(p): c for p, c in sorted(self.visits2.items())},
            "unlucky": list(self.unlucky),
            "recovery_steps": list(self.recovery_steps),
        }


def sample_successor(game: StochasticGame, v: int, rng: np.random.Generator) -> int:
    """Draw a successor of random vertex `v` by exact inverse sampling."""
    u = Fraction(int(rng.integers(0, 1 << _SAMPLE_BITS)), 1 << _SAMPLE_BITS)
    cumulative = Fraction(0)
    for target, p in zip(game.successors[v], game.probabilities[v]):
        cumulative += p
        if u < cumulative:
            return target
    return game.successors[v][-1]


def simulate(
    game: StochasticGame,
    sigma1: StrategyMachine,
    adversary: Adversary = "random",
    seed: int = 0,
    steps: int = 10_000,
    start: int = 0,
    resolver: Optional[Resolver] = None,
    keep_trace: bool = False,
) -> SimulationStats:
    """
    Simulate `steps` steps from `start`.

    Args:
        sigma1 (StrategyMachine): Player-1 strategy; reset before the run.
        adversary: `"random"` (uniform Player-2 moves) or a Player-2 machine.
        seed (int): Seed of the numpy generator.
        resolver (Optional[Resolver]): Picks successors of random vertices
            instead of sampling.

    Raises:
        StrategyError: If a strategy plays an illegal move.
    """
    rng = np.random.default_rng(seed)
    sigma1.reset()
    if isinstance(adversary, StrategyMachine):
        if adversary.player != PLAYER2:
            raise StrategyError("the adversary must be a Player-2 strategy")
        adversary.reset()
    elif adversary not in (None, "random"):
        raise ValueError(f"Unknown adversary '{adversary}'")

    sha = hashlib.sha256()
    visits1, visits2 = Counter(), Counter()
    trace = [] if keep_trace else None
    v = start
    for _ in range(steps):
        sha.update(v.to_bytes(4, "little"))
        visits1[game.omega1[v]] += 1
        visits2[game.omega2[v]] += 1
        if trace is not None:
            trace.append(v)
        owner = game.owners[v]
        move1 = sigma1.step(v)
        move2 = adversary.step(v) if isinstance(adversary, StrategyMachine) else None
        if owner is Owner.P1:
            nxt = move1
        elif owner is Owner.P2:
            if move2 is None:
                succ = game.successors[v]
                move2 = succ[int(rng.integers(0, len(succ)))]
            nxt = move2
        elif resolver is not None:
            nxt = resolver(v)
            if nxt not in game.successors[v]:
                raise StrategyError(f"resolver chose illegal move {v} -> {nxt}")
        else:
            nxt = sample_successor(game, v, rng)
        v = nxt

    return SimulationStats(
        seed=seed,
        steps=steps,
        digest=sha.hexdigest(),
        visits1=dict(visits1),
        visits2=dict(visits2),
        unlucky=[e.step for e in getattr(sigma1, "events", [])],
        recovery_steps=list(getattr(sigma1, "recoveries", [])),
        trace=trace,
    )


def simulate_runs(
    game: StochasticGame,
    sigma1: StrategyMachine,
    runs: int,
    seed: int = 0,
    steps: int = 10_000,
    start: int = 0,
    adversary: Adversary = "random",
    jobs: int = 1,
) -> List[SimulationStats]:
    """
    Independent replicas with seeds spawned from `seed`. Every replica plays
    its own copy of the strategies.
    """
    seeds = [
        int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(runs)
    ]

    def one(run_seed: int) -> SimulationStats:
        own_adversary = copy.deepcopy(adversary) if isinstance(adversary, StrategyMachine) else adversary
        return simulate(game, copy.deepcopy(sigma1), own_adversary, run_seed, steps, start)

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        stats = list(pool.map(one, seeds))
    logger.info("simulated %d runs of %d steps", runs, steps)
    return stats
