"""
    Register construction turning a conjunction of two parity conditions
    into a single parity condition.

For every even priority `e` of the indexing condition a register `r_e`
remembers the largest priority of the stored condition seen since the
last visit to `e`. A state whose indexing priority is `d` then receives

    offset(d, top) + r_d    if d is even
    offset(d, top)          if d is odd

where `top` is the largest stored priority rounded up to an even number.
Offsets of consecutive indexing priorities occupy disjoint, increasing
ranges, so the largest indexing priority seen infinitely often decides
the output range and, when it is even, the register decides its parity.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sasgames.automata.d2pw import D2PW, DPW
from sasgames.game.core import StochasticGame

logger = logging.getLogger(__name__)

Registers = Tuple[int, ...]


def offset(d: int, top: int) -> int:
    """
    Base output priority of indexing priority `d`.

    Raises:
        ValueError: If `top` is odd or negative.
    """
    if top < 0 or top % 2:
        raise ValueError(f"top must be a non-negative even number, got {top}")
    if d % 2 == 0:
        return d * (top + 2) // 2
    return (d * (top + 2) + top) // 2


def _round_even(p: int) -> int:
    return p + (p % 2)


@dataclass(frozen=True)
class RegisterLayout:
    """
    Which condition indexes the registers and the register ranges.

    Attributes:
        swapped (bool): False when registers are indexed by the first
            priority and store the second one.
        index_max (int): Largest indexing priority.
        top (int): Largest stored priority, rounded up to even.
    """

    swapped: bool
    index_max: int
    top: int

    @classmethod
    def choose(cls, d1: int, d2: int) -> "RegisterLayout":
        """Pick the orientation with the smaller state bound; ties keep the
        registers indexed by the first condition."""
        standard = (_round_even(d2) + 1) ** (d1 // 2 + 1)
        swapped = (_round_even(d1) + 1) ** (d2 // 2 + 1)
        if swapped < standard:
            return cls(True, d2, _round_even(d1))
        return cls(False, d1, _round_even(d2))

    @property
    def evens(self) -> Tuple[int, ...]:
        """Indexing priorities owning a register."""
        return tuple(range(0, self.index_max + 1, 2))

    @property
    def zeros(self) -> Registers:
        return (0,) * len(self.evens)

    @property
    def grid_size(self) -> int:
        """Number of register vectors."""
        return (self.top + 1) ** len(self.evens)

    def _split(self, p1: int, p2: int) -> Tuple[int, int]:
        return (p2, p1) if self.swapped else (p1, p2)

    def update(self, registers: Registers, p1: int, p2: int) -> Registers:
        """Registers after leaving a state with priorities `(p1, p2)`."""
        index, stored = self._split(p1, p2)
        return tuple(
            stored if e == index else max(r, stored)
            for e, r in zip(self.evens, registers)
        )

    def priority(self, registers: Registers, p1: int, p2: int) -> int:
        index, _ = self._split(p1, p2)
        if index % 2:
            return offset(index, self.top)
        return offset(index, self.top) + registers[index // 2]

    @property
    def max_priority(self) -> int:
        """Largest priority the layout can produce."""
        d = self.index_max
        return offset(d, self.top) + (0 if d % 2 else self.top)

    def state_bound(self, n: int) -> int:
        return n * self.grid_size


@dataclass(frozen=True)
class ConjunctionDPW:
    """A conjunction DPW together with the product state behind each of its states."""

    dpw: DPW
    layout: RegisterLayout
    states: Tuple[Tuple[int, Registers], ...]


def _explore(initial, successors, priorities, layout):
    """Breadth-first exploration of `(state, registers)` pairs."""
    index: Dict[Tuple[int, Registers], int] = {}
    order: List[Tuple[int, Registers]] = []
    queue = deque()
    for q in initial:
        key = (q, layout.zeros)
        if key not in index:
            index[key] = len(order)
            order.append(key)
            queue.append(key)
    edges: List[List[int]] = []
    while queue:
        q, regs = queue.popleft()
        nxt = layout.update(regs, *priorities(q))
        row = []
        for t in successors(q):
            key = (t, nxt)
            if key not in index:
                index[key] = len(order)
                order.append(key)
                queue.append(key)
            row.append(index[key])
        edges.append(row)
    return order, index, edges


def build_conjunction_dpw(automaton: D2PW) -> ConjunctionDPW:
    """
    Deterministic parity automaton for the conjunction of both conditions.

    Only states reachable from `(initial, 0...0)` are built. The result is
    complete and deterministic on the same alphabet.
    """
    layout = RegisterLayout.choose(automaton.d1, automaton.d2)
    prios = lambda q: (automaton.omega1[q], automaton.omega2[q])
    order, _, edges = _explore(
        [automaton.initial], lambda q: automaton.transitions[q], prios, layout
    )
    omega = tuple(layout.priority(regs, *prios(q)) for q, regs in order)
    dpw = DPW(automaton.alphabet, 0, tuple(tuple(row) for row in edges), omega)
    logger.debug(
        "conjunction DPW: %d -> %d states, swapped=%s, max priority %d",
        automaton.n,
        dpw.n,
        layout.swapped,
        max(omega),
    )
    return ConjunctionDPW(dpw, layout, tuple(order))


def build_disjunction_dpw(automaton: D2PW) -> DPW:
    """DPW for the disjunction, as the complement of the conjunction of complements."""
    inner = build_conjunction_dpw(automaton.complement_priorities()).dpw
    return DPW(
        inner.alphabet,
        inner.initial,
        inner.transitions,
        tuple(p + 1 for p in inner.omega),
    )


@dataclass(frozen=True, eq=False)
class ProductGame:
    """
    A game lifted to `(vertex, registers)` pairs with a single priority.

    `game.omega1` holds the combined priority and `game.omega2` is all
    zeros. Vertex `i` of the product stands for `states[i]`.
    """

    game: StochasticGame
    layout: RegisterLayout
    states: Tuple[Tuple[int, Registers], ...]
    index: Dict[Tuple[int, Registers], int]

    @property
    def omega12(self) -> Tuple[int, ...]:
        return self.game.omega1

    def base(self, pid: int) -> int:
        return self.states[pid][0]

    def initial(self, v: int) -> int:
        return self.index[(v, self.layout.zeros)]


def lift_conjunction_game(
    game: StochasticGame,
    omega1: Optional[Sequence[int]] = None,
    omega2: Optional[Sequence[int]] = None,
) -> ProductGame:
    """
    Lift `game` to the product with register vectors for
    `Parity(omega1) & Parity(omega2)` (default: the priorities of `game`).

    Vertices are all pairs reachable from some `(v, 0...0)`; owners and
    distributions are inherited from the base vertex.
    """
    if omega1 is not None or omega2 is not None:
        game = game.with_priorities(omega1, omega2)
    layout = RegisterLayout.choose(game.d1, game.d2)
    prios = lambda v: (game.omega1[v], game.omega2[v])
    order, index, edges = _explore(range(game.n), lambda v: game.successors[v], prios, layout)
    product = StochasticGame(
        tuple(game.owners[v] for v, _ in order),
        tuple(tuple(row) for row in edges),
        tuple(game.probabilities[v] for v, _ in order),
        tuple(layout.priority(regs, *prios(v)) for v, regs in order),
        (0,) * len(order),
    )
    logger.debug(
        "lifted game: %d -> %d vertices, swapped=%s", game.n, product.n, layout.swapped
    )
    return ProductGame(product, layout, tuple(order), index)
