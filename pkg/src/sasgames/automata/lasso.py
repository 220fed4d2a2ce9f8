"""
    Acceptance of ultimately periodic runs and words.
"""
from typing import List, Sequence, Tuple, Union

from sasgames.automata.d2pw import D2PW, DPW, Automaton
from sasgames.errors import PreconditionError
from sasgames.game.core import StochasticGame


def _conditions(carrier: Union[Automaton, StochasticGame]) -> List[Sequence[int]]:
    if isinstance(carrier, DPW):
        return [carrier.omega]
    if isinstance(carrier, D2PW):
        return [carrier.omega1, carrier.omega2]
    return [carrier.omega1, carrier.omega2]


def lasso_accepts(
    carrier: Union[Automaton, StochasticGame],
    stem: Sequence[int],
    cycle: Sequence[int],
) -> bool:
    """
    Decide `stem . cycle^omega` for a run of an automaton or a play of a game.

    Every parity condition of the carrier must have an even maximum on the
    cycle (for a game: both the sure and the almost-sure priority).

    Raises:
        PreconditionError: If the sequence is not a legal run (wrong start
            for an automaton, or a missing edge).
    """
    if not cycle:
        raise PreconditionError("cycle must be non-empty")
    path = list(stem) + list(cycle) + [cycle[0]]
    successors = carrier.successors
    if not isinstance(carrier, StochasticGame) and path[0] != carrier.initial:
        raise PreconditionError("run does not start in the initial state", vertex=path[0])
    for a, b in zip(path, path[1:]):
        if not 0 <= a < len(successors) or b not in successors[a]:
            raise PreconditionError(f"no edge {a} -> {b}", vertex=a)
    return all(max(omega[q] for q in cycle) % 2 == 0 for omega in _conditions(carrier))


def word_lasso(
    automaton: Automaton, stem: Sequence[str], cycle: Sequence[str]
) -> Tuple[List[int], List[int]]:
    """
    Turn the word `stem . cycle^omega` into a state lasso of the automaton.

    Returns:
        The state stem and the state cycle of the unique run.
    """
    if not cycle:
        raise PreconditionError("cycle word must be non-empty")
    states = automaton.run(stem)
    q = states[-1]
    stem_states = states[:-1]
    seen = {}
    block_starts = []
    while q not in seen:
        seen[q] = len(block_starts)
        block_starts.append(q)
        for letter in cycle:
            stem_states.append(q)
            q = automaton.step(q, letter)
    # blocks from the first occurrence of q onwards repeat forever
    split = len(stem) + seen[q] * len(cycle)
    return stem_states[:split], stem_states[split:]


def accepts_word(automaton: Automaton, stem: Sequence[str], cycle: Sequence[str]) -> bool:
    stem_states, cycle_states = word_lasso(automaton, stem, cycle)
    return lasso_accepts(automaton, stem_states, cycle_states)
