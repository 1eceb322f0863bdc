import logging
import sys
from typing import Optional

import click

from app.commands.cli_commands import COMMANDS
from app.database.factories.database_manager import DatabaseManager
from app.settings import Settings

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(verbose: bool) -> None:
    # stdout carries the command output, so logs go to stderr
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def create_app(settings: Optional[Settings] = None) -> click.Group:
    """Application Factory Pattern to create and configure the command group."""
    defaults = settings or Settings()

    @click.group(name='bruhat')
    @click.option('--max-elements', type=click.IntRange(min=1), default=defaults.max_elements, show_default=True,
                  help='Cap on the size of any enumerated quotient.')
    @click.option('--oracle-cap', type=click.IntRange(min=1), default=defaults.oracle_cap, show_default=True,
                  help='Cap on the brute-force group enumeration.')
    @click.option('--store', 'store_url', metavar='URL', default=defaults.store_url,
                  help='SQLite URL of the results store.')
    @click.option('--verbose', is_flag=True, default=defaults.verbose, help='Log at DEBUG level on stderr.')
    @click.pass_context
    def cli(ctx, max_elements, oracle_cap, store_url, verbose):
        """Bruhat orders of Weyl group parabolic quotients."""
        configure_logging(verbose)
        ctx.obj = Settings(
            max_elements=max_elements,
            oracle_cap=oracle_cap,
            jobs=defaults.jobs,
            store_url=store_url,
            verbose=verbose,
        )

    if defaults.store_url:
        DatabaseManager.init_db(db_url=defaults.store_url)

    for command in COMMANDS:
        cli.add_command(command)

    return cli
