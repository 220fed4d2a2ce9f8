"""
    Convert a D2PW into an equivalent DPW.
"""
import logging

import click

from sasgames.automata.d2pw import D2PW, load_automaton, serialize_automaton
from sasgames.automata.product import build_conjunction_dpw, build_disjunction_dpw
from sasgames.errors import GameFormatError
from sasgames.utils.io import write_text

logger = logging.getLogger(__name__)


@click.command(name="product")
@click.argument("automaton_file", type=click.Path(dir_okay=False))
@click.option(
    "--disjunction",
    is_flag=True,
    help="Accept when either condition holds instead of both.",
)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the DPW here instead of stdout.")
def product(automaton_file, disjunction, output):
    """Write the DPW accepting the conjunction of both conditions of AUTOMATON_FILE."""
    automaton = load_automaton(automaton_file)
    if not isinstance(automaton, D2PW):
        raise GameFormatError(f"{automaton_file} holds a DPW, expected a D2PW")
    if disjunction:
        dpw = build_disjunction_dpw(automaton)
    else:
        conjunction = build_conjunction_dpw(automaton)
        dpw = conjunction.dpw
        logger.info(
            "%d states, bound %d, swapped=%s",
            dpw.n,
            conjunction.layout.state_bound(automaton.n),
            conjunction.layout.swapped,
        )
    write_text(serialize_automaton(dpw), output)
