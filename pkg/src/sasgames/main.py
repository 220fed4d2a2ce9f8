import inspect
import logging
import sys
from typing import Optional, Sequence

import click
from omegaconf.errors import OmegaConfBaseException

import sasgames.runners
from sasgames.config import load_config
from sasgames.constants import ENV_PREFIX, EXIT_INPUT, EXIT_OK, EXIT_USAGE
from sasgames.errors import SasError
from sasgames.utils.logger import setup_logging

logger = logging.getLogger(__name__)


@click.group()
@click.option(
    "--log-level",
    default=None,
    help="Logging level (default: $SASGAMES_LOGGING_LEVEL, then WARNING).",
)
@click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Also log to this file.")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="YAML file merged over the built-in defaults.",
)
@click.option(
    "--set",
    "overrides",
    multiple=True,
    metavar="KEY=VALUE",
    help="Override one configuration value, e.g. oracle.max_states=512.",
)
@click.pass_context
def main(ctx, log_level, log_file, config_path, overrides):
    """Main entry point for sasgames CLI"""
    setup_logging(log_level, log_file)
    ctx.obj = load_config(config_path, overrides)


for name, obj in inspect.getmembers(sasgames.runners):
    if isinstance(obj, (click.Command, click.Group)):
        main.add_command(obj)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI on `argv` and return its exit code instead of exiting.

    0 success, 1 negative verdict, 2 usage error, 3 input error.
    """
    try:
        code = main.main(
            args=list(argv) if argv is not None else None,
            prog_name="sasgames",
            standalone_mode=False,
            auto_envvar_prefix=ENV_PREFIX,
        )
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_INPUT
    except (SasError, OmegaConfBaseException, ValueError, OSError) as e:
        logger.debug("command failed", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        return EXIT_INPUT
    return code if isinstance(code, int) else EXIT_OK


def entrypoint():
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()
