"""
Root logger configuration etc.
"""

from logging import getLogger, Logger
from os.path import sep
from pathlib import Path

from logging518.config import fileConfig

from config.constants import PROJECT_ROOT

ROOT_LOGGER_NAME = " "

fileConfig(PROJECT_ROOT / "pyproject.toml")


def get_root_logger() -> Logger:
    """
    Get the root logger of the project.

    Returns:
        Logger: Instance of root logger
    """
    return getLogger(ROOT_LOGGER_NAME)


def get_child_logger(file_path: str) -> Logger:
    """
    Get the logger of a module, named by its path inside the project.

    Args:
        file_path (str): Path of the module, usually __file__

    Returns:
        Logger: Instance of child logger
    """
    module_path = Path(file_path)
    if module_path.is_relative_to(PROJECT_ROOT):
        module_path = module_path.relative_to(PROJECT_ROOT)
    return get_root_logger().getChild(f"{sep}{module_path}")


def set_console_level(level: int) -> None:
    """
    Change the verbosity of the project logger and its handlers.

    Args:
        level (int): Logging level, e.g. logging.DEBUG
    """
    root_logger = get_root_logger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers:
        handler.setLevel(level)
