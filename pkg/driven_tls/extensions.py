"""
Extensions for the driven two-level-system package: logging and the sweep
worker pool.
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

logger = logging.getLogger("driven_tls")


def configure_logging(level="WARNING", stream=None):
    """Install a single stderr handler on the package logger."""
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger


def map_ordered(func, tasks, workers=1):
    """
    Apply func to every task and return results in task order.

    With workers > 1 the tasks run in a process pool; func and the tasks
    must be picklable.
    """
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(func, tasks))
