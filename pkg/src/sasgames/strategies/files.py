"""
    Strategy documents written by `synth` and read back by `simulate`,
    `export-dot` and the oracles.

Memoryless and Mealy strategies are stored as tables. A counter strategy
has unbounded memory and is stored by its schedule only: the derivation
trace it is built from is a function of the game, so loading it solves
the game again and rebuilds the same machine.
"""
from typing import Any, Dict, Mapping, Optional

from sasgames.config import ScheduleConfig
from sasgames.constants import JSON_KEYS, PLAYER1, SCHEMA_VERSION
from sasgames.errors import StrategyError
from sasgames.game.core import StochasticGame
from sasgames.strategies.base import StrategyMachine, strategy_from_json
from sasgames.strategies.counter import Schedule
from sasgames.strategies.synth import synth_counter_strategy
from sasgames.utils.io import read_json


def strategy_document(
    game: StochasticGame,
    machine: StrategyMachine,
    schedule: Optional[Schedule] = None,
) -> Dict[str, Any]:
    """
    JSON document for `machine`, stamped with the digest of `game`.

    Raises:
        StrategyError: If the machine has no table form and no schedule is given.
    """
    if hasattr(machine, "to_json"):
        document = machine.to_json()
    elif schedule is not None:
        document = {
            JSON_KEYS.SCHEMA: SCHEMA_VERSION,
            JSON_KEYS.KIND: "counter",
            "player": machine.player,
            "schedule": schedule.to_json(),
        }
    else:
        raise StrategyError(f"cannot serialize a {type(machine).__name__}")
    document["game"] = game.digest()
    return document


def _schedule_config(data: Mapping[str, Any]) -> ScheduleConfig:
    if data.get("kind") == "table":
        return ScheduleConfig(kind="table", table=[int(n) for n in data["table"]])
    return ScheduleConfig(kind="geometric", n0=int(data["n0"]), base=int(data["base"]))


def load_strategy_document(game: StochasticGame, data: Mapping[str, Any]) -> StrategyMachine:
    """
    Rebuild the strategy of a document for `game`.

    Raises:
        StrategyError: If the document was written for another game or is malformed.
    """
    if data.get(JSON_KEYS.SCHEMA) != SCHEMA_VERSION:
        raise StrategyError(f"unsupported strategy schema {data.get(JSON_KEYS.SCHEMA)!r}")
    if "game" in data and data["game"] != game.digest():
        raise StrategyError("strategy was synthesized for another game")
    if data.get(JSON_KEYS.KIND) != "counter":
        return strategy_from_json(game, data)
    if data.get("player", PLAYER1) != PLAYER1:
        raise StrategyError("counter strategies belong to Player 1")
    try:
        config = _schedule_config(data["schedule"])
    except (KeyError, TypeError, ValueError) as e:
        raise StrategyError(f"malformed schedule: {e}") from e
    return synth_counter_strategy(game, schedule=config)


def load_strategy(game: StochasticGame, path: str) -> StrategyMachine:
    """
    Raises:
        GameFormatError: If the file is not a JSON object.
        StrategyError: If the document does not fit `game`.
    """
    return load_strategy_document(game, read_json(path))
