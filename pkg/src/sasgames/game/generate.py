"""
    Seeded random games and the exhaustive tiny-game corpus.
"""
import itertools
import logging
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from sasgames.game.core import Owner, StochasticGame

logger = logging.getLogger(__name__)


def random_game(
    seed: int,
    n: int,
    branching: int = 2,
    random_fraction: float = 0.25,
    d1: int = 3,
    d2: int = 3,
    p2_fraction: Optional[float] = None,
) -> StochasticGame:
    """
    Draw a random game.

    Args:
        seed (int): Seed of the numpy generator; equal seeds give equal games.
        n (int): Number of vertices.
        branching (int): Maximum out-degree (every vertex has at least one successor).
        random_fraction (float): Probability that a vertex is a random vertex.
        d1 (int): Maximum sure priority.
        d2 (int): Maximum almost-sure priority.
        p2_fraction (Optional[float]): Probability that a non-random vertex
            belongs to Player 2, default 0.5.

    Raises:
        ValueError: If a parameter is out of range.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if branching < 1:
        raise ValueError(f"branching must be positive, got {branching}")
    if not 0.0 <= random_fraction <= 1.0:
        raise ValueError(f"random_fraction must lie in [0, 1], got {random_fraction}")
    if d1 < 0 or d2 < 0:
        raise ValueError(f"priorities must be non-negative, got d1={d1}, d2={d2}")
    p2_fraction = 0.5 if p2_fraction is None else p2_fraction

    rng = np.random.default_rng(seed)
    owners, successors, probabilities = [], [], []
    for _ in range(n):
        if rng.random() < random_fraction:
            owner = Owner.RANDOM
        elif rng.random() < p2_fraction:
            owner = Owner.P2
        else:
            owner = Owner.P1
        k = int(rng.integers(1, min(branching, n) + 1))
        succ = tuple(sorted(int(u) for u in rng.choice(n, size=k, replace=False)))
        owners.append(owner)
        successors.append(succ)
        probabilities.append(
            tuple(Fraction(1, k) for _ in succ) if owner is Owner.RANDOM else None
        )
    omega1 = tuple(int(p) for p in rng.integers(0, d1 + 1, size=n))
    omega2 = tuple(int(p) for p in rng.integers(0, d2 + 1, size=n))
    return StochasticGame(
        tuple(owners), tuple(successors), tuple(probabilities), omega1, omega2
    )


def _successor_sets(n: int, max_succ: int) -> Sequence[Tuple[int, ...]]:
    return [
        combo
        for k in range(1, max_succ + 1)
        for combo in itertools.combinations(range(n), k)
    ]


def enumerate_games(
    n: int,
    max_succ: int = 2,
    max_priority: int = 3,
    random_vertex: Optional[int] = None,
) -> Iterator[StochasticGame]:
    """
    Yield every game on exactly `n` vertices with at most `max_succ`
    successors per vertex and priorities up to `max_priority`.

    Player vertices range over both players. If `random_vertex` is given,
    that vertex is instead a random vertex with uniform probabilities.
    The corpus grows very quickly: use `n <= 2` for exhaustive sweeps and
    sample larger sizes with `random_game`.
    """
    succ_sets = _successor_sets(n, max_succ)
    priorities = range(max_priority + 1)

    def vertex_configs(v: int):
        owners = (Owner.RANDOM,) if v == random_vertex else (Owner.P1, Owner.P2)
        return itertools.product(owners, succ_sets, priorities, priorities)

    for configs in itertools.product(*(vertex_configs(v) for v in range(n))):
        owners = tuple(c[0] for c in configs)
        successors = tuple(c[1] for c in configs)
        probabilities = tuple(
            tuple(Fraction(1, len(c[1])) for _ in c[1])
            if c[0] is Owner.RANDOM
            else None
            for c in configs
        )
        yield StochasticGame(
            owners,
            successors,
            probabilities,
            tuple(c[2] for c in configs),
            tuple(c[3] for c in configs),
        )
