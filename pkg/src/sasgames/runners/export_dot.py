"""
    DOT rendering of games, winning regions and memoryless strategies.
"""
from typing import Dict, Optional

import click
from graphviz import Digraph

from sasgames.config import AppConfig
from sasgames.game.core import Owner, StochasticGame
from sasgames.game.vertex_set import VertexSet
from sasgames.game.spg_format import load_game
from sasgames.solvers.sas import solve_sas
from sasgames.strategies.base import MemorylessStrategy
from sasgames.strategies.files import load_strategy
from sasgames.utils.io import write_text

SHAPES = {Owner.P1: "circle", Owner.P2: "box", Owner.RANDOM: "diamond"}
REGION_COLORS = ("palegreen", "lightpink")


def game_to_dot(
    game: StochasticGame,
    winning: Optional[VertexSet] = None,
    moves: Optional[Dict[int, int]] = None,
) -> Digraph:
    """
    Player-1 vertices are circles, Player-2 vertices boxes and random
    vertices diamonds. When `winning` is given, vertices are filled by
    region; edges chosen by `moves` are drawn bold.
    """
    dot = Digraph(
        name="game",
        graph_attr=[("rankdir", "LR"), ("nodesep", "0.5")],
        node_attr=[("fontname", "mono")],
        edge_attr=[("fontname", "mono")],
    )
    for v in range(game.n):
        name = game.labels[v] or f"v{v}"
        attrs = {"shape": SHAPES[game.owners[v]]}
        if winning is not None and v in game.real:
            attrs["style"] = "filled"
            attrs["fillcolor"] = REGION_COLORS[0] if v in winning else REGION_COLORS[1]
        dot.node(str(v), f"{name}\\n({game.omega1[v]},{game.omega2[v]})", **attrs)
    moves = moves or {}
    for v in range(game.n):
        probs = game.probabilities[v] or (None,) * len(game.successors[v])
        for u, p in zip(game.successors[v], probs):
            attrs = {}
            if p is not None:
                attrs["label"] = str(p)
            if moves.get(v) == u:
                attrs["style"] = "bold"
            dot.edge(str(v), str(u), **attrs)
    return dot


@click.command(name="export-dot")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option("--regions/--no-regions", default=False, help="Color the sure-almost-sure winning regions.")
@click.option("--strategy", "strategy_file", type=click.Path(dir_okay=False), default=None, help="Highlight the moves of a memoryless strategy.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the DOT source here instead of stdout.")
@click.pass_context
def export_dot(ctx, game_file, regions, strategy_file, output):
    """Render the game in GAME_FILE as Graphviz DOT source."""
    config: AppConfig = ctx.obj
    game = load_game(game_file)
    winning = solve_sas(game, config=config.solver).w1 if regions else None
    moves = None
    if strategy_file is not None:
        strategy = load_strategy(game, strategy_file)
        if not isinstance(strategy, MemorylessStrategy):
            raise click.UsageError("only memoryless strategies can be drawn")
        moves = strategy.choice
    write_text(game_to_dot(game, winning, moves).source, output)
