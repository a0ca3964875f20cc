import logging
import sys
from typing import Optional

from zdgraph.config import CONFIG


# ===============================
# LOGGER SETUP
# ===============================

def setup_logger(name: str = "zdgraph", level: Optional[str] = None) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(level or CONFIG["logging"]["level"])

    formatter = logging.Formatter(
        "%(asctime)s | %(levelname)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )

    # stderr keeps stdout reserved for reports
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(formatter)

    if not logger.handlers:
        logger.addHandler(ch)

    return logger
