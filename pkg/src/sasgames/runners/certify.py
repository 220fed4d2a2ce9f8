"""
    Produce and check certificates of winning regions.
"""
import logging
from typing import Optional, Tuple

import click

from sasgames.certificates.certificate import (
    build_certificate,
    certificate_from_json,
    certificate_to_json,
    verify_certificate,
)
from sasgames.config import AppConfig
from sasgames.constants import EXIT_NEGATIVE, EXIT_USAGE, JSON_KEYS, SCHEMA_VERSION
from sasgames.errors import GameFormatError
from sasgames.game.spg_format import load_game, region_from_json
from sasgames.solvers.sas import solve_sas
from sasgames.utils.io import emit, read_json
from sasgames.verdict import Verdict

logger = logging.getLogger(__name__)


@click.command(name="certify")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.option(
    "--region",
    "region_ids",
    type=int,
    multiple=True,
    help="Vertex of the claimed region (repeatable); default: the whole winning region.",
)
@click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write the certificate here instead of stdout.")
@click.pass_context
def certify(ctx, game_file, region_ids: Tuple[int, ...], output: Optional[str]):
    """Write a certificate that Player 1 wins the region of GAME_FILE."""
    config: AppConfig = ctx.obj
    game = load_game(game_file)
    region = region_from_json(game.n, region_ids) if region_ids else None
    trace = solve_sas(game, config=config.solver).trace
    certificate = build_certificate(game, trace=trace, region=region)
    logger.info("certificate with %d nodes", certificate.size())
    emit(certificate_to_json(game, certificate), output)


@click.command(name="verify-cert")
@click.argument("game_file", type=click.Path(dir_okay=False))
@click.argument("certificate_file", type=click.Path(dir_okay=False))
@click.option("--jobs", type=int, default=None, help="Worker threads for independent sub-certificates.")
@click.pass_context
def verify_cert(ctx, game_file, certificate_file, jobs):
    """
    Check CERTIFICATE_FILE against GAME_FILE without solving the game.

    Exit code 0 accepts, 1 rejects, 2 means the certificate is malformed.
    """
    config: AppConfig = ctx.obj
    game = load_game(game_file)
    try:
        data = read_json(certificate_file)
        certificate = certificate_from_json(data)
    except GameFormatError as e:
        click.echo(f"Error: malformed certificate: {e}", err=True)
        ctx.exit(EXIT_USAGE)
    if data.get("game") != game.digest():
        verdict = Verdict(False, "certificate was issued for another game")
    else:
        verdict = verify_certificate(game, certificate, jobs=jobs or config.oracle.jobs)
    emit({JSON_KEYS.SCHEMA: SCHEMA_VERSION, **verdict.to_json()})
    if not verdict:
        ctx.exit(EXIT_NEGATIVE)
