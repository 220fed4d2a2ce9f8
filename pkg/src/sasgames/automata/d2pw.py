"""
    Deterministic parity automata with one (DPW) or two (D2PW) priority functions.

Text format, one declaration per line after the header `d2pw 1;` (or `dpw 1;`):

    state <id> [init] p1=<nat> p2=<nat> on <letter> -> <id>, on <letter> -> <id>;

A DPW uses a single `p=<nat>` field. The alphabet is the set of letters
used; every state needs exactly one transition per letter.
"""
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np

from sasgames.errors import GameFormatError

_HEADER = re.compile(r"^(d2pw|dpw)\s+1\s*;$")
_STATE = re.compile(r"^state\s+(\d+)(\s+init)?\s+(.*);$")
_PRIO = re.compile(r"^(p|p1|p2)=(\d+)$")
_EDGE = re.compile(r"^on\s+([A-Za-z0-9_]+)\s*->\s*(\d+)$")


@dataclass(frozen=True)
class _Automaton:
    alphabet: Tuple[str, ...]
    initial: int
    transitions: Tuple[Tuple[int, ...], ...]
    """`transitions[q][i]` is the successor of `q` on `alphabet[i]`."""

    def __post_init__(self):
        n = len(self.transitions)
        if n == 0:
            raise GameFormatError("automaton has no state")
        if not 0 <= self.initial < n:
            raise GameFormatError(f"initial state {self.initial} does not exist")
        for q, row in enumerate(self.transitions):
            if len(row) != len(self.alphabet):
                raise GameFormatError("transition function is not complete", vertex=q)
            for t in row:
                if not 0 <= t < n:
                    raise GameFormatError(f"successor {t} does not exist", vertex=q)

    @property
    def n(self) -> int:
        return len(self.transitions)

    def step(self, q: int, letter: str) -> int:
        return self.transitions[q][self.letter_index[letter]]

    @cached_property
    def letter_index(self) -> Dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    @cached_property
    def successors(self) -> Tuple[Tuple[int, ...], ...]:
        """Distinct successors per state, ascending."""
        return tuple(tuple(sorted(set(row))) for row in self.transitions)

    def run(self, word: Sequence[str]) -> List[int]:
        """States visited on `word` from the initial state, initial state included."""
        states = [self.initial]
        for letter in word:
            states.append(self.step(states[-1], letter))
        return states


@dataclass(frozen=True)
class D2PW(_Automaton):
    """Automaton accepting when both `Parity(omega1)` and `Parity(omega2)` hold."""

    omega1: Tuple[int, ...] = ()
    omega2: Tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        if len(self.omega1) != self.n or len(self.omega2) != self.n:
            raise GameFormatError("every state needs two priorities")

    @property
    def d1(self) -> int:
        return max(self.omega1)

    @property
    def d2(self) -> int:
        return max(self.omega2)

    def complement_priorities(self) -> "D2PW":
        """Both priority functions shifted by one; each condition is complemented."""
        return D2PW(
            self.alphabet,
            self.initial,
            self.transitions,
            tuple(p + 1 for p in self.omega1),
            tuple(p + 1 for p in self.omega2),
        )


@dataclass(frozen=True)
class DPW(_Automaton):
    """Automaton accepting when `Parity(omega)` holds."""

    omega: Tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        if len(self.omega) != self.n:
            raise GameFormatError("every state needs a priority")

    @property
    def d(self) -> int:
        return max(self.omega)


Automaton = Union[D2PW, DPW]


def parse_automaton(text: str) -> Automaton:
    """
    Parse a `.d2pw` (or `dpw`) document.

    Raises:
        GameFormatError: On syntax errors (with line) or incomplete /
            non-deterministic transition functions (with state id).
    """
    kind = None
    decls: Dict[int, dict] = {}
    initial = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if kind is None:
            m = _HEADER.match(line)
            if not m:
                raise GameFormatError("expected header 'd2pw 1;' or 'dpw 1;'", line=lineno)
            kind = m.group(1)
            continue
        m = _STATE.match(line)
        if not m:
            raise GameFormatError(f"cannot parse declaration '{line}'", line=lineno)
        sid = int(m.group(1))
        if sid in decls:
            raise GameFormatError(f"state {sid} declared twice", line=lineno)
        if m.group(2):
            initial.append(sid)
        decls[sid] = _parse_state_body(m.group(3), kind, lineno)
    if kind is None:
        raise GameFormatError("empty document", line=1)
    if len(initial) != 1:
        raise GameFormatError(f"expected exactly one initial state, found {len(initial)}")
    return _assemble(kind, decls, initial[0])


def _parse_state_body(body: str, kind: str, lineno: int) -> dict:
    head, _, rest = body.partition(" on ")
    prios: Dict[str, int] = {}
    for token in head.split():
        m = _PRIO.match(token)
        if not m:
            raise GameFormatError(f"malformed attribute '{token}'", line=lineno)
        prios[m.group(1)] = int(m.group(2))
    expected = {"p"} if kind == "dpw" else {"p1", "p2"}
    if set(prios) != expected:
        raise GameFormatError(
            f"expected priorities {sorted(expected)}, found {sorted(prios)}", line=lineno
        )
    edges: Dict[str, int] = {}
    if rest:
        for item in ("on " + rest).split(","):
            m = _EDGE.match(item.strip())
            if not m:
                raise GameFormatError(f"malformed transition '{item.strip()}'", line=lineno)
            letter, target = m.group(1), int(m.group(2))
            if letter in edges:
                raise GameFormatError(f"two transitions on '{letter}'", line=lineno)
            edges[letter] = target
    return {"prios": prios, "edges": edges}


def _assemble(kind: str, decls: Dict[int, dict], initial: int) -> Automaton:
    ids = sorted(decls)
    index = {s: i for i, s in enumerate(ids)}
    alphabet = tuple(sorted({a for d in decls.values() for a in d["edges"]}))
    if not alphabet:
        raise GameFormatError("automaton has no transition")
    transitions = []
    for sid in ids:
        edges = decls[sid]["edges"]
        row = []
        for a in alphabet:
            if a not in edges:
                raise GameFormatError(f"no transition on '{a}'", vertex=sid)
            if edges[a] not in index:
                raise GameFormatError(f"dangling successor {edges[a]}", vertex=sid)
            row.append(index[edges[a]])
        transitions.append(tuple(row))
    if kind == "dpw":
        return DPW(alphabet, index[initial], tuple(transitions), tuple(decls[s]["prios"]["p"] for s in ids))
    return D2PW(
        alphabet,
        index[initial],
        tuple(transitions),
        tuple(decls[s]["prios"]["p1"] for s in ids),
        tuple(decls[s]["prios"]["p2"] for s in ids),
    )


def serialize_automaton(automaton: Automaton) -> str:
    is_dpw = isinstance(automaton, DPW)
    lines = ["dpw 1;" if is_dpw else "d2pw 1;"]
    for q in range(automaton.n):
        init = " init" if q == automaton.initial else ""
        if is_dpw:
            prios = f"p={automaton.omega[q]}"
        else:
            prios = f"p1={automaton.omega1[q]} p2={automaton.omega2[q]}"
        edges = ", ".join(
            f"on {a} -> {t}" for a, t in zip(automaton.alphabet, automaton.transitions[q])
        )
        lines.append(f"state {q}{init} {prios} {edges};")
    return "\n".join(lines) + "\n"


def load_automaton(path: str) -> Automaton:
    with open(path, "r", encoding="utf-8") as f:
        return parse_automaton(f.read())


def random_d2pw(
    seed: int,
    n: int,
    d1: int,
    d2: int,
    alphabet: Sequence[str] = ("a", "b"),
) -> D2PW:
    """Random complete D2PW with `n` states; equal seeds give equal automata."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = np.random.default_rng(seed)
    transitions = tuple(
        tuple(int(t) for t in rng.integers(0, n, size=len(alphabet))) for _ in range(n)
    )
    return D2PW(
        tuple(alphabet),
        0,
        transitions,
        tuple(int(p) for p in rng.integers(0, d1 + 1, size=n)),
        tuple(int(p) for p in rng.integers(0, d2 + 1, size=n)),
    )
