from sasgames.game.core import (
    Embedding,
    Owner,
    StochasticGame,
    VertexRecord,
    build_game,
    derandomize,
    fix_strategy,
    induces_subgame,
    is_trap,
    opponent,
    restrict,
    subgame_closure,
)
from sasgames.game.generate import enumerate_games, random_game
from sasgames.game.spg_format import (
    game_to_json,
    load_game,
    parse_game,
    region_to_json,
    serialize_game,
)
from sasgames.game.vertex_set import VertexSet

__all__ = [
    "Embedding",
    "Owner",
    "StochasticGame",
    "VertexRecord",
    "VertexSet",
    "build_game",
    "derandomize",
    "enumerate_games",
    "fix_strategy",
    "game_to_json",
    "induces_subgame",
    "is_trap",
    "load_game",
    "opponent",
    "parse_game",
    "random_game",
    "region_to_json",
    "restrict",
    "serialize_game",
    "subgame_closure",
]
