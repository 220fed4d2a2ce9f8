"""
    Reader and writer for the `.spg` text format and the JSON export of games.

A document starts with the header `spg 1;` followed by one declaration per line:

    vertex <id> owner=<p1|p2|rand> p1=<nat> p2=<nat> succ=<id>[:<num>/<den>],... [label=<name>];

`#` starts a comment. Ids are arbitrary naturals and are normalized to
`0..n-1` in ascending order on load.
"""
import re
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

from sasgames.constants import JSON_KEYS, SCHEMA_VERSION
from sasgames.errors import GameFormatError
from sasgames.game.core import Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet

_HEADER = re.compile(r"^spg\s+1\s*;$")
_VERTEX = re.compile(r"^vertex\s+(\d+)\s+(.*);$")
_ATTR = re.compile(r"^([a-z0-9]+)=(\S+)$")
_SUCC = re.compile(r"^(\d+)(?::(\d+)(?:/(\d+))?)?$")
_LABEL = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_game(text: str) -> StochasticGame:
    """
    Parse an `.spg` document into a validated game.

    Args:
        text (str): The document.

    Returns:
        StochasticGame: The game with ids normalized to `0..n-1`.

    Raises:
        GameFormatError: With `line` set for syntax errors and `vertex`
            (the id used in the document) set for semantic errors.
    """
    header_seen = False
    decls: Dict[int, Dict[str, Any]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if not header_seen:
            if not _HEADER.match(line):
                raise GameFormatError("expected header 'spg 1;'", line=lineno)
            header_seen = True
            continue
        m = _VERTEX.match(line)
        if not m:
            raise GameFormatError(f"cannot parse declaration '{line}'", line=lineno)
        vid = int(m.group(1))
        if vid in decls:
            raise GameFormatError(f"vertex {vid} declared twice", line=lineno)
        decls[vid] = _parse_attrs(m.group(2), lineno)
    if not header_seen:
        raise GameFormatError("empty document, expected header 'spg 1;'", line=1)
    if not decls:
        raise GameFormatError("document declares no vertex", line=1)
    return _assemble(decls)


def _parse_attrs(body: str, lineno: int) -> Dict[str, Any]:
    attrs: Dict[str, Any] = {}
    for token in body.split():
        m = _ATTR.match(token)
        if not m:
            raise GameFormatError(f"malformed attribute '{token}'", line=lineno)
        key, value = m.groups()
        if key in attrs:
            raise GameFormatError(f"attribute '{key}' repeated", line=lineno)
        if key == "owner":
            if value not in ("p1", "p2", "rand"):
                raise GameFormatError(f"unknown owner '{value}'", line=lineno)
            attrs[key] = Owner(value)
        elif key in ("p1", "p2"):
            if not value.isdigit():
                raise GameFormatError(f"priority '{value}' is not a natural", line=lineno)
            attrs[key] = int(value)
        elif key == "succ":
            succ = []
            for item in value.split(","):
                sm = _SUCC.match(item)
                if not sm:
                    raise GameFormatError(f"malformed successor '{item}'", line=lineno)
                target, num, den = sm.groups()
                if den is not None and int(den) == 0:
                    raise GameFormatError("zero denominator", line=lineno)
                prob = None if num is None else Fraction(int(num), int(den or 1))
                succ.append((int(target), prob))
            attrs[key] = succ
        elif key == "label":
            if not _LABEL.match(value):
                raise GameFormatError(f"malformed label '{value}'", line=lineno)
            attrs[key] = value
        else:
            raise GameFormatError(f"unknown attribute '{key}'", line=lineno)
    return attrs


def _assemble(decls: Dict[int, Dict[str, Any]]) -> StochasticGame:
    ids = sorted(decls)
    index = {v: i for i, v in enumerate(ids)}
    owners, successors, probabilities, omega1, omega2, labels = [], [], [], [], [], []
    for vid in ids:
        attrs = decls[vid]
        for key in ("owner", "p1", "p2", "succ"):
            if key not in attrs:
                raise GameFormatError(f"missing attribute '{key}'", vertex=vid)
        owner = attrs["owner"]
        succ = attrs["succ"]
        targets = []
        for target, _ in succ:
            if target not in index:
                raise GameFormatError(f"dangling successor {target}", vertex=vid)
            targets.append(index[target])
        if len(set(targets)) != len(targets):
            raise GameFormatError("duplicate successor", vertex=vid)
        annotated = [p is not None for _, p in succ]
        if owner is Owner.RANDOM:
            if not all(annotated):
                raise GameFormatError(
                    "random vertex needs a probability on every successor", vertex=vid
                )
            probs = tuple(p for _, p in succ)
            if any(p <= 0 for p in probs):
                raise GameFormatError("probabilities must be positive", vertex=vid)
            if sum(probs) != 1:
                raise GameFormatError(
                    f"probabilities sum to {sum(probs)}, expected 1", vertex=vid
                )
            probabilities.append(probs)
        else:
            if any(annotated):
                raise GameFormatError(
                    "only random vertices carry probabilities", vertex=vid
                )
            probabilities.append(None)
        owners.append(owner)
        successors.append(tuple(targets))
        omega1.append(attrs["p1"])
        omega2.append(attrs["p2"])
        labels.append(attrs.get("label"))
    return StochasticGame(
        tuple(owners),
        tuple(successors),
        tuple(probabilities),
        tuple(omega1),
        tuple(omega2),
        tuple(labels),
    )


def serialize_game(game: StochasticGame) -> str:
    """Write the normalized `.spg` form of `game`."""
    lines = ["spg 1;"]
    for v in range(game.n):
        probs = game.probabilities[v]
        if probs is None:
            succ = ",".join(str(u) for u in game.successors[v])
        else:
            succ = ",".join(
                f"{u}:{p.numerator}/{p.denominator}"
                for u, p in zip(game.successors[v], probs)
            )
        label = "" if game.labels[v] is None else f" label={game.labels[v]}"
        lines.append(
            f"vertex {v} owner={game.owners[v].value} p1={game.omega1[v]} "
            f"p2={game.omega2[v]} succ={succ}{label};"
        )
    return "\n".join(lines) + "\n"


def load_game(path: str) -> StochasticGame:
    with open(path, "r", encoding="utf-8") as f:
        return parse_game(f.read())


def game_to_json(game: StochasticGame) -> Dict[str, Any]:
    vertices = []
    edges = []
    for v in range(game.n):
        vertices.append(
            {
                JSON_KEYS.ID: v,
                JSON_KEYS.OWNER: game.owners[v].value,
                JSON_KEYS.PRIO1: game.omega1[v],
                JSON_KEYS.PRIO2: game.omega2[v],
                JSON_KEYS.LABEL: game.labels[v],
            }
        )
        probs = game.probabilities[v] or (None,) * len(game.successors[v])
        for u, p in zip(game.successors[v], probs):
            edges.append(
                {
                    JSON_KEYS.SOURCE: v,
                    JSON_KEYS.TARGET: u,
                    JSON_KEYS.PROB: None if p is None else str(p),
                }
            )
    return {
        JSON_KEYS.SCHEMA: SCHEMA_VERSION,
        JSON_KEYS.VERTICES: vertices,
        JSON_KEYS.EDGES: edges,
    }


def region_to_json(region: Optional[Iterable[int]]) -> List[int]:
    return [] if region is None else sorted(int(v) for v in region)


def region_from_json(n: int, ids: Iterable[Any]) -> VertexSet:
    """
    Raises:
        GameFormatError: If an entry is not a vertex id of the game.
    """
    clean = []
    for v in ids:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
            raise GameFormatError(f"'{v}' is not a vertex id of a {n}-vertex game")
        clean.append(v)
    return VertexSet.from_ids(n, clean)
