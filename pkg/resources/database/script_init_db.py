#!/usr/bin/env python3
"""
Create an empty SQLite results store.

The tables are the ones declared in app/models; running the script twice
is harmless.
"""
import sys

import click
from sqlalchemy import inspect

from app.database.factories.database_manager import DEFAULT_STORE_URL, DatabaseManager


@click.command()
@click.argument('url', default=DEFAULT_STORE_URL)
def main(url):
    """Create the store tables at URL."""
    click.echo(f"Initialising results store at {url}...")
    try:
        session = DatabaseManager.init_db(db_url=url)
    except Exception as e:
        click.echo(f"Could not open the store: {e}", err=True)
        sys.exit(1)
    try:
        tables = inspect(session.get_bind()).get_table_names()
        click.echo(f"Tables: {', '.join(sorted(tables))}")
    finally:
        DatabaseManager.close_session(session)


if __name__ == "__main__":
    main()
