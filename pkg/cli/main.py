"""qexp entry point: parse, validate, dispatch, print, exit."""

import logging
import sys
from typing import List, Optional

from config.settings import Settings, get_settings
from spectral.exceptions import QexpError
from .commands import COMMANDS
from .models import CommandConfig
from .output import render, write_error
from .parser import build_parser

logger = logging.getLogger(__name__)


def configure_logging(settings: Settings) -> None:
    """File logging at settings.log_level, only if nothing configured logging yet."""
    if logging.root.handlers:
        return
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(levelname)s - %(message)s",
        handlers=[logging.FileHandler(settings.log_file, encoding="utf-8", mode="a")],
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command and return its exit code.

    0 success, 1 non-convergence, 2 input or parameter error, 3 degenerate
    dimension. Usage errors exit 2 from argparse itself.
    """
    args = build_parser().parse_args(argv)
    settings = get_settings()
    configure_logging(settings)

    try:
        config = CommandConfig.from_args(args)
        if config.threads is None and config.command in ("pack", "sweep"):
            config = config.model_copy(update={"threads": settings.threads})
        logger.info(f"COMMAND: {config.command}")
        payload = COMMANDS[config.command](config)
        text = render(payload, config.format)
    except QexpError as e:
        logger.error(f"COMMAND_FAILED: {e.error_type}: {e.message}")
        write_error(e)
        return e.exit_code

    sys.stdout.write(text)
    sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
