"""
    Language equivalence of a D2PW and a DPW.

The two automata run in lockstep. A word is accepted by exactly one of
them iff some reachable strongly connected set of product states has
disagreeing verdicts: the largest priorities on the set decide each
parity condition. Such a set is found by refining SCCs, one wanted
parity per condition at a time; small SCCs are also enumerated subset by
subset as an independent cross-check.
"""
import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sasgames.automata.d2pw import D2PW, DPW
from sasgames.automata.lasso import accepts_word
from sasgames.config import OracleConfig
from sasgames.defaults import get_default_oracle_config
from sasgames.errors import BoundExceededError, PreconditionError
from sasgames.solvers.graph import is_nontrivial, shortest_path, strongly_connected_components

logger = logging.getLogger(__name__)

# (priorities per product state, wanted parity of the largest one)
Condition = Tuple[Sequence[int], int]


@dataclass(frozen=True)
class EquivalenceResult:
    """
    Attributes:
        equal (bool): Both automata accept the same words.
        stem (List[str]): Counterexample prefix, when not equal.
        cycle (List[str]): Counterexample period, when not equal.
    """

    equal: bool
    stem: List[str] = field(default_factory=list)
    cycle: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self) -> Dict:
        if self.equal:
            return {"verdict": "equal"}
        return {"verdict": "different", "stem": self.stem, "cycle": self.cycle}


class _SyncProduct:
    def __init__(self, a: D2PW, b: DPW, max_states: int):
        self.alphabet = a.alphabet
        self.states: List[Tuple[int, int]] = []
        index: Dict[Tuple[int, int], int] = {}
        edges: List[List[int]] = []
        start = (a.initial, b.initial)
        index[start] = 0
        self.states.append(start)
        queue = deque([start])
        while queue:
            qa, qb = queue.popleft()
            row = []
            for i in range(len(self.alphabet)):
                key = (a.transitions[qa][i], b.transitions[qb][i])
                if key not in index:
                    if len(self.states) >= max_states:
                        raise BoundExceededError("synchronized product states", len(self.states) + 1, max_states)
                    index[key] = len(self.states)
                    self.states.append(key)
                    queue.append(key)
                row.append(index[key])
            edges.append(row)
        self.letters = edges
        self.successors = [sorted(set(row)) for row in edges]
        self.omega1 = [a.omega1[qa] for qa, _ in self.states]
        self.omega2 = [a.omega2[qa] for qa, _ in self.states]
        self.omega = [b.omega[qb] for _, qb in self.states]

    @property
    def n(self) -> int:
        return len(self.states)

    def letter(self, s: int, t: int) -> str:
        return self.alphabet[self.letters[s].index(t)]

    def word(self, path: Sequence[int]) -> List[str]:
        return [self.letter(s, t) for s, t in zip(path, path[1:])]


def _refine(successors, members: List[int], conditions: Sequence[Condition]) -> Optional[List[int]]:
    """A strongly connected set inside `members` meeting every condition, if any."""
    stack = [members]
    while stack:
        candidates = stack.pop()
        for component in strongly_connected_components(successors, candidates):
            if not is_nontrivial(component, successors):
                continue
            for omega, parity in conditions:
                top = max(omega[v] for v in component)
                if top % 2 != parity:
                    stack.append([v for v in component if omega[v] != top])
                    break
            else:
                return component
    return None


def _strongly_connected(successors, subset: Sequence[int]) -> bool:
    components = strongly_connected_components(successors, subset)
    return len(components) == 1 and is_nontrivial(components[0], successors)


def _enumerate(successors, component: List[int], conditions: Sequence[Condition]) -> bool:
    for size in range(1, len(component) + 1):
        for subset in itertools.combinations(component, size):
            if _strongly_connected(successors, subset) and all(
                max(omega[v] for v in subset) % 2 == parity for omega, parity in conditions
            ):
                return True
    return False


def _cases(product: _SyncProduct) -> List[List[Condition]]:
    """Ways to accept in one automaton and reject in the other."""
    return [
        [(product.omega1, 0), (product.omega2, 0), (product.omega, 1)],
        [(product.omega1, 1), (product.omega, 0)],
        [(product.omega2, 1), (product.omega, 0)],
    ]


def _lasso(product: _SyncProduct, component: List[int]) -> Tuple[List[str], List[str]]:
    """Stem from the initial state to the component and a closed walk covering it."""
    members = [False] * product.n
    for v in component:
        members[v] = True
    succ = product.successors
    stem = shortest_path(succ, 0, component)
    anchor = stem[-1]
    walk = [anchor]
    for target in component:
        if target not in walk:
            walk.extend(shortest_path(succ, walk[-1], [target], members)[1:])
    if walk[-1] == anchor:
        # the component is a single state with a self-loop
        walk.append(anchor)
    else:
        walk.extend(shortest_path(succ, walk[-1], [anchor], members)[1:])
    return product.word(stem), product.word(walk)


def dpw_equiv_oracle(
    a: D2PW,
    b: DPW,
    config: Optional[OracleConfig] = None,
) -> EquivalenceResult:
    """
    Decide `L(a) == L(b)`, returning a counterexample lasso word otherwise.

    Raises:
        PreconditionError: If the alphabets differ.
        BoundExceededError: If the synchronized product exceeds `config.max_states`.
    """
    config = get_default_oracle_config() if config is None else config
    if tuple(a.alphabet) != tuple(b.alphabet):
        raise PreconditionError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    product = _SyncProduct(a, b, config.max_states)
    logger.debug("synchronized product: %d states", product.n)
    everything = list(range(product.n))
    for conditions in _cases(product):
        found = _refine(product.successors, everything, conditions)
        for component in strongly_connected_components(product.successors, everything):
            if len(component) > config.max_scc:
                continue
            refined = _refine(product.successors, component, conditions) is not None
            if refined != _enumerate(product.successors, component, conditions):
                raise AssertionError(f"SCC refinement and enumeration disagree on {component}")
        if found is not None:
            stem, cycle = _lasso(product, found)
            if accepts_word(a, stem, cycle) == accepts_word(b, stem, cycle):
                raise AssertionError(f"counterexample {stem} ({cycle})^w is accepted by both or neither")
            return EquivalenceResult(False, stem, cycle)
    return EquivalenceResult(True)
