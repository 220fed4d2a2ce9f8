"""
    Core game model: stochastic two-player games with two priority functions.

A game is an immutable value. Every derived game (restriction, closure,
derandomized copy, product) is a new value, so games can be hashed and
used as memoization keys.
"""
import hashlib
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from sasgames.constants import PLAYER1, PLAYER2, SINK_LABEL
from sasgames.errors import GameFormatError, PreconditionError, StrategyError
from sasgames.game.vertex_set import VertexSet

logger = logging.getLogger(__name__)


class Owner(str, Enum):
    """Who resolves the choice at a vertex."""

    P1 = "p1"
    P2 = "p2"
    RANDOM = "rand"

    @classmethod
    def of_player(cls, player: int) -> "Owner":
        if player == PLAYER1:
            return cls.P1
        if player == PLAYER2:
            return cls.P2
        raise ValueError(f"Expected player 1 or 2, got {player}")


def opponent(player: int) -> int:
    if player not in (PLAYER1, PLAYER2):
        raise ValueError(f"Expected player 1 or 2, got {player}")
    return PLAYER1 + PLAYER2 - player


@dataclass(frozen=True)
class VertexRecord:
    """A vertex as seen from the outside: id, owner and optional label."""

    id: int
    owner: Owner
    label: Optional[str] = None


@dataclass(frozen=True)
class StochasticGame:
    """
    Finite stochastic game with a sure priority `omega1` and an almost-sure
    priority `omega2` on every vertex.

    Vertices are dense ids `0..n-1`. For a random vertex `probabilities[v]`
    is aligned with `successors[v]`; for player vertices it is `None`.
    Vertices labelled `SINK_LABEL` are closure sinks: absorbing random
    vertices with priorities `(0, 0)`. They are never counted as real vertices.

    Raises:
        GameFormatError: If the data violates a structural invariant.
    """

    owners: Tuple[Owner, ...]
    successors: Tuple[Tuple[int, ...], ...]
    probabilities: Tuple[Optional[Tuple[Fraction, ...]], ...]
    omega1: Tuple[int, ...]
    omega2: Tuple[int, ...]
    labels: Tuple[Optional[str], ...] = field(default=())

    def __post_init__(self):
        n = len(self.owners)
        set_ = lambda name, value: object.__setattr__(self, name, value)
        set_("owners", tuple(Owner(o) for o in self.owners))
        set_("successors", tuple(tuple(int(u) for u in s) for s in self.successors))
        set_(
            "probabilities",
            tuple(
                None if p is None else tuple(Fraction(x) for x in p)
                for p in self.probabilities
            ),
        )
        set_("omega1", tuple(int(p) for p in self.omega1))
        set_("omega2", tuple(int(p) for p in self.omega2))
        set_("labels", tuple(self.labels) if self.labels else (None,) * n)
        self._validate()

    def _validate(self):
        n = len(self.owners)
        for name in ("successors", "probabilities", "omega1", "omega2", "labels"):
            if len(getattr(self, name)) != n:
                raise GameFormatError(
                    f"'{name}' has {len(getattr(self, name))} entries for {n} vertices"
                )
        for v in range(n):
            succ = self.successors[v]
            if not succ:
                raise GameFormatError("vertex has no successor", vertex=v)
            if len(set(succ)) != len(succ):
                raise GameFormatError("duplicate successor", vertex=v)
            for u in succ:
                if not 0 <= u < n:
                    raise GameFormatError(f"successor {u} does not exist", vertex=v)
            if self.omega1[v] < 0 or self.omega2[v] < 0:
                raise GameFormatError("priorities must be non-negative", vertex=v)
            probs = self.probabilities[v]
            if self.owners[v] is Owner.RANDOM:
                if probs is None or len(probs) != len(succ):
                    raise GameFormatError(
                        "random vertex needs one probability per successor", vertex=v
                    )
                if any(p <= 0 for p in probs):
                    raise GameFormatError("probabilities must be positive", vertex=v)
                if sum(probs) != 1:
                    raise GameFormatError(
                        f"probabilities sum to {sum(probs)}, expected 1", vertex=v
                    )
            elif probs is not None:
                raise GameFormatError(
                    "player vertices must not carry probabilities", vertex=v
                )
            if self.labels[v] == SINK_LABEL and not (
                self.owners[v] is Owner.RANDOM
                and succ == (v,)
                and self.omega1[v] == 0
                and self.omega2[v] == 0
            ):
                raise GameFormatError(
                    f"'{SINK_LABEL}' is reserved for absorbing (0,0) random vertices",
                    vertex=v,
                )

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash(
            (
                self.owners,
                self.successors,
                self.probabilities,
                self.omega1,
                self.omega2,
                self.labels,
            )
        )

    @property
    def n(self) -> int:
        return len(self.owners)

    @cached_property
    def vertices(self) -> Tuple[VertexRecord, ...]:
        return tuple(
            VertexRecord(v, self.owners[v], self.labels[v]) for v in range(self.n)
        )

    @cached_property
    def predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        preds = [[] for _ in range(self.n)]
        for v, succ in enumerate(self.successors):
            for u in succ:
                preds[u].append(v)
        return tuple(tuple(p) for p in preds)

    @cached_property
    def all(self) -> VertexSet:
        return VertexSet.full(self.n)

    @cached_property
    def sinks(self) -> VertexSet:
        return VertexSet([label == SINK_LABEL for label in self.labels])

    @cached_property
    def real(self) -> VertexSet:
        """Every vertex that is not a closure sink."""
        return ~self.sinks

    @property
    def d1(self) -> int:
        return max(self.omega1, default=0)

    @property
    def d2(self) -> int:
        return max(self.omega2, default=0)

    def owned_by(self, owner: Owner) -> VertexSet:
        return VertexSet([o is owner for o in self.owners])

    def is_player(self, v: int, player: int) -> bool:
        return self.owners[v] is Owner.of_player(player)

    def delta(self, v: int) -> Dict[int, Fraction]:
        """Distribution of a random vertex as a successor -> probability map."""
        probs = self.probabilities[v]
        if probs is None:
            raise ValueError(f"Vertex {v} is not a random vertex")
        return dict(zip(self.successors[v], probs))

    def priority_set(self, omega: Sequence[int], p: int, within: Optional[VertexSet] = None) -> VertexSet:
        """Vertices of `within` (default: all) whose priority under `omega` equals `p`."""
        mask = [q == p for q in omega]
        result = VertexSet(mask)
        return result if within is None else result & within

    def with_priorities(
        self,
        omega1: Optional[Sequence[int]] = None,
        omega2: Optional[Sequence[int]] = None,
    ) -> "StochasticGame":
        return replace(
            self,
            omega1=tuple(self.omega1 if omega1 is None else omega1),
            omega2=tuple(self.omega2 if omega2 is None else omega2),
        )

    def digest(self) -> str:
        """Stable hex digest of the game content."""
        h = hashlib.sha256()
        for v in range(self.n):
            probs = self.probabilities[v]
            h.update(
                f"{v}|{self.owners[v].value}|{self.omega1[v]}|{self.omega2[v]}|"
                f"{self.successors[v]}|"
                f"{None if probs is None else [str(p) for p in probs]}|"
                f"{self.labels[v]}\n".encode()
            )
        return h.hexdigest()

    def __repr__(self) -> str:
        return (
            f"StochasticGame(n={self.n}, d1={self.d1}, d2={self.d2}, "
            f"sinks={len(self.sinks)})"
        )


@dataclass(frozen=True)
class Embedding:
    """
    A derived game together with the id of every vertex in its parent.

    `origin[i]` is the parent id of local vertex `i`, or `None` for a sink
    created by the derivation itself.
    """

    game: StochasticGame
    origin: Tuple[Optional[int], ...]
    parent_n: int

    @cached_property
    def local_ids(self) -> Dict[int, int]:
        return {p: i for i, p in enumerate(self.origin) if p is not None}

    def local(self, parent_id: int) -> Optional[int]:
        return self.local_ids.get(parent_id)

    def lift(self, region: VertexSet) -> VertexSet:
        """Map a local region to the parent, dropping fresh sinks."""
        return VertexSet.from_ids(
            self.parent_n,
            (self.origin[i] for i in region if self.origin[i] is not None),
        )

    def lower(self, region: VertexSet) -> VertexSet:
        """Map a parent region to local ids, ignoring vertices outside."""
        ids = self.local_ids
        return VertexSet.from_ids(self.game.n, (ids[v] for v in region if v in ids))


def induces_subgame(game: StochasticGame, region: VertexSet) -> bool:
    """True if every player vertex of `region` keeps a successor in it and
    every random vertex of `region` has all its successors in it."""
    return _first_subgame_violation(game, region) is None


def _first_subgame_violation(game: StochasticGame, region: VertexSet) -> Optional[int]:
    for v in region:
        succ = game.successors[v]
        if game.owners[v] is Owner.RANDOM:
            if not all(u in region for u in succ):
                return v
        elif not any(u in region for u in succ):
            return v
    return None


def is_trap(game: StochasticGame, player: int, region: VertexSet) -> bool:
    """True if `region` induces a subgame that `player` cannot leave."""
    if not induces_subgame(game, region):
        return False
    owner = Owner.of_player(player)
    return all(
        all(u in region for u in game.successors[v])
        for v in region
        if game.owners[v] is owner
    )


def _rebuild(
    game: StochasticGame,
    ids: Sequence[int],
    add_sink: bool,
) -> Embedding:
    index = {v: i for i, v in enumerate(ids)}
    sink = len(ids)
    owners, successors, probabilities = [], [], []
    omega1, omega2, labels = [], [], []
    for v in ids:
        owners.append(game.owners[v])
        omega1.append(game.omega1[v])
        omega2.append(game.omega2[v])
        labels.append(game.labels[v])
        if game.owners[v] is Owner.RANDOM:
            succ, probs, leak = [], [], Fraction(0)
            for u, p in zip(game.successors[v], game.probabilities[v]):
                if u in index:
                    succ.append(index[u])
                    probs.append(p)
                else:
                    leak += p
            if leak:
                succ.append(sink)
                probs.append(leak)
            successors.append(tuple(succ))
            probabilities.append(tuple(probs))
        else:
            successors.append(tuple(index[u] for u in game.successors[v] if u in index))
            probabilities.append(None)
    origin = list(ids)
    if add_sink:
        owners.append(Owner.RANDOM)
        successors.append((sink,))
        probabilities.append((Fraction(1),))
        omega1.append(0)
        omega2.append(0)
        labels.append(SINK_LABEL)
        origin.append(None)
    sub = StochasticGame(
        tuple(owners),
        tuple(successors),
        tuple(probabilities),
        tuple(omega1),
        tuple(omega2),
        tuple(labels),
    )
    return Embedding(sub, tuple(origin), game.n)


def restrict(game: StochasticGame, region: VertexSet) -> Embedding:
    """
    Restrict `game` to a region inducing a subgame.

    Raises:
        PreconditionError: If `region` does not induce a subgame.
    """
    bad = _first_subgame_violation(game, region)
    if bad is not None:
        raise PreconditionError("region does not induce a subgame", vertex=bad)
    return _rebuild(game, region.to_list(), add_sink=False)


def subgame_closure(game: StochasticGame, region: VertexSet) -> Embedding:
    """
    Close `region` with a fresh absorbing sink.

    Random vertices keep their in-region successors and send the remaining
    probability mass to the sink. The sink is the last vertex of the result.

    Raises:
        PreconditionError: If a player vertex of `region` has no successor in it.
    """
    for v in region:
        if game.owners[v] is not Owner.RANDOM and not any(
            u in region for u in game.successors[v]
        ):
            raise PreconditionError(
                "player vertex has no successor inside the region", vertex=v
            )
    return _rebuild(game, region.to_list(), add_sink=True)


def derandomize(game: StochasticGame) -> StochasticGame:
    """Hand every random vertex to Player 2. Sinks lose their sink label."""
    return StochasticGame(
        tuple(Owner.P2 if o is Owner.RANDOM else o for o in game.owners),
        game.successors,
        (None,) * game.n,
        game.omega1,
        game.omega2,
        tuple(None if label == SINK_LABEL else label for label in game.labels),
    )


def fix_strategy(
    game: StochasticGame, player: int, choice: Mapping[int, int]
) -> StochasticGame:
    """
    Fix a memoryless strategy: every vertex of `player` becomes a random
    vertex moving to its chosen successor with probability 1.

    Raises:
        StrategyError: If the choice is partial or illegal.
    """
    owner = Owner.of_player(player)
    owners, successors, probabilities = [], [], []
    for v in range(game.n):
        if game.owners[v] is owner:
            if v not in choice:
                raise StrategyError(f"no move for vertex {v}")
            u = choice[v]
            if u not in game.successors[v]:
                raise StrategyError(f"illegal move {v} -> {u}")
            owners.append(Owner.RANDOM)
            successors.append((u,))
            probabilities.append((Fraction(1),))
        else:
            owners.append(game.owners[v])
            successors.append(game.successors[v])
            probabilities.append(game.probabilities[v])
    return StochasticGame(
        tuple(owners),
        tuple(successors),
        tuple(probabilities),
        game.omega1,
        game.omega2,
        game.labels,
    )


def memoryless_choices(game: StochasticGame, player: int) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    """Vertices of `player` and their successor lists, ready for enumeration."""
    owner = Owner.of_player(player)
    owned = tuple(v for v in range(game.n) if game.owners[v] is owner)
    return owned, tuple(game.successors[v] for v in owned)


def build_game(
    vertices: Iterable[Tuple[str, int, int, Sequence]],
    labels: Optional[Sequence[Optional[str]]] = None,
) -> StochasticGame:
    """
    Convenience constructor from `(owner, prio1, prio2, successors)` tuples.

    Successors of random vertices are `(target, probability)` pairs, the
    others plain ids.
    """
    owners, successors, probabilities, omega1, omega2 = [], [], [], [], []
    for owner, p1, p2, succ in vertices:
        owner = Owner(owner)
        owners.append(owner)
        omega1.append(p1)
        omega2.append(p2)
        if owner is Owner.RANDOM:
            successors.append(tuple(u for u, _ in succ))
            probabilities.append(tuple(Fraction(p) for _, p in succ))
        else:
            successors.append(tuple(succ))
            probabilities.append(None)
    return StochasticGame(
        tuple(owners),
        tuple(successors),
        tuple(probabilities),
        tuple(omega1),
        tuple(omega2),
        tuple(labels) if labels else (),
    )
