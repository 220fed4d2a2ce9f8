"""
    Seeded random games and automata.
"""
import click

from sasgames.automata.d2pw import random_d2pw, serialize_automaton
from sasgames.game.generate import random_game
from sasgames.game.spg_format import serialize_game
from sasgames.utils.io import write_text


@click.command(name="gen")
@click.option("--kind", type=click.Choice(["game", "d2pw"]), default="game", show_default=True)
@click.option("--seed", type=int, required=True, help="Equal seeds give equal outputs.")
@click.option("--n", type=int, default=8, show_default=True, help="Vertices (or states).")
@click.option("--branching", type=int, default=2, show_default=True, help="Maximum out-degree of a game vertex.")
@click.option("--random-fraction", type=float, default=0.25, show_default=True, help="Share of random vertices.")
@click.option("--d1", type=int, default=3, show_default=True, help="Largest first priority.")
@click.option("--d2", type=int, default=3, show_default=True, help="Largest second priority.")
@click.option("--alphabet", default="a,b", show_default=True, help="Comma-separated letters of a D2PW.")
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout.")
def gen(kind, seed, n, branching, random_fraction, d1, d2, alphabet, output):
    """Generate a random game (.spg) or D2PW (.d2pw)."""
    if seed < 0:
        raise click.BadParameter("must be non-negative", param_hint="--seed")
    if kind == "game":
        text = serialize_game(
            random_game(seed, n, branching=branching, random_fraction=random_fraction, d1=d1, d2=d2)
        )
    else:
        letters = tuple(a.strip() for a in alphabet.split(",") if a.strip())
        text = serialize_automaton(random_d2pw(seed, n, d1, d2, alphabet=letters))
    write_text(text, output)
