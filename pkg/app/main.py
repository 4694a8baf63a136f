import argparse
import json
import logging
import sys
from typing import List, Optional

from app.core.config import settings
from app.modules.availability.presentation.commands import availability_commands
from app.modules.geometry.presentation.commands import pg_commands
from app.modules.multilevel.presentation.commands import multilevel_commands
from app.modules.simulation.presentation.commands import simulation_commands
from app.shared.presentation.exceptions.exit_codes import (
    EXIT_FAILURE,
    EXIT_OK,
    error_payload,
    exit_code_for,
)


# ------------------------------------------------------------------
# LOGGING
# ------------------------------------------------------------------

logging.basicConfig(
    level=settings.LOG_LEVEL,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------
# PARSER
# ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Sistemas de interseção multinível sobre espaços projetivos finitos",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")

    subparsers = parser.add_subparsers(dest="command", required=True)

    # ------------------------------------------------------------------
    # MODULES / COMMANDS
    # ------------------------------------------------------------------

    pg_commands.register(subparsers)
    multilevel_commands.register(subparsers)
    availability_commands.register(subparsers)
    simulation_commands.register(subparsers)

    return parser


# ------------------------------------------------------------------
# ENTRYPOINT
# ------------------------------------------------------------------

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sai com 2 em erro de uso e 0 em --help/--version
        return int(e.code or 0)

    try:
        code = args.handler(args)
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_FAILURE:
            logger.exception("Unexpected error in '%s'", args.command)
        else:
            logger.debug("Command '%s' failed: %s", args.command, e)
        print(json.dumps(error_payload(e), ensure_ascii=False), file=sys.stderr)
        return code

    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
