import logging
import os
import sys
import time
from typing import Optional

import numpy as np

from .config import LOG_DIR, LOG_LEVEL


def configure_logging(level: Optional[str] = None, log_dir: Optional[str] = None) -> None:
    # Logging: diagnostic stream (stderr) + optional file
    root_logger = logging.getLogger()
    root_logger.setLevel((level or LOG_LEVEL).upper())
    formatter = logging.Formatter("%(asctime)s %(levelname)s %(message)s")
    log_dir = log_dir or LOG_DIR
    if log_dir and not any(isinstance(h, logging.FileHandler) for h in root_logger.handlers):
        os.makedirs(log_dir, exist_ok=True)
        fh = logging.FileHandler(os.path.join(log_dir, "qrelay.log"))
        fh.setFormatter(formatter)
        root_logger.addHandler(fh)
    if not any(type(h) is logging.StreamHandler for h in root_logger.handlers):
        sh = logging.StreamHandler(sys.stderr)
        sh.setFormatter(formatter)
        root_logger.addHandler(sh)


def trial_rng(seed: int, point_index: int, trial_index: int) -> np.random.Generator:
    """Independent stream for one trial; a pure function of its indices."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(point_index, trial_index)))


def duration_ms(started: float) -> int:
    return int((time.perf_counter() - started) * 1000)
