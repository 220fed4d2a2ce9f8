"""
    Constants used in sasgames for JSON field names and reserved labels.
"""
from typing import NamedTuple


class JSON_KEYS_NT(NamedTuple):
    """A NamedTuple storing the stable field names of every JSON document we emit."""

    SCHEMA: str = "schema"
    """Key for the schema version, always `SCHEMA_VERSION`."""
    VERTICES: str = "vertices"
    """Key for the vertex list of a game."""
    EDGES: str = "edges"
    """Key for the edge list of a game."""
    ID: str = "id"
    """Key for a vertex id."""
    OWNER: str = "owner"
    """Key for the owner of a vertex (`p1`, `p2` or `rand`)."""
    PRIO1: str = "prio1"
    """Key for the sure (first) priority."""
    PRIO2: str = "prio2"
    """Key for the almost-sure (second) priority."""
    PROB: str = "prob"
    """Key for an edge probability, a `num/den` string or null."""
    SOURCE: str = "from"
    """Key for the source of an edge."""
    TARGET: str = "to"
    """Key for the target of an edge."""
    LABEL: str = "label"
    """Key for an optional vertex label."""
    WINNING: str = "winning"
    """Key for the Player-1 winning region."""
    LOSING: str = "losing"
    """Key for the Player-1 losing region."""
    TRACE_DIGEST: str = "trace_digest"
    """Key for the hex digest of a derivation trace."""
    TRACE: str = "trace"
    """Key for a serialized derivation trace."""
    KIND: str = "kind"
    """Key for the kind tag of a strategy or certificate."""
    DIGEST: str = "digest"
    """Key for the content digest of a certificate."""


JSON_KEYS = JSON_KEYS_NT()
"""Instance of JSON_KEYS_NT"""

SCHEMA_VERSION = 1
"""Version stamped into every JSON document."""

SINK_LABEL = "v_sink"
"""Label reserved for the absorbing vertex added by a subgame closure."""

ENV_PREFIX = "SASGAMES"
"""Prefix for environment variables read by the CLI."""

PLAYER1 = 1
PLAYER2 = 2

EXIT_OK = 0
EXIT_NEGATIVE = 1
"""Exit code of a command whose verdict is negative (vertex losing, certificate rejected, ...)."""
EXIT_USAGE = 2
EXIT_INPUT = 3
"""Exit code for unreadable or malformed input."""
