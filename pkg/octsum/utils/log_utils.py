"""Utility functions for logging."""

import os
import logging
import json
from datetime import datetime
from typing import Dict, Any, Optional, Sequence

from ..config import settings

# Configure root logger
logging.basicConfig(
    level=settings.LOG_LEVEL,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: Logger name

    Returns:
        Logger instance
    """
    logger = logging.getLogger(f"{settings.APP_NAME}.{name}")
    logger.setLevel(settings.LOG_LEVEL)

    # Add file handler if in production
    if settings.ENV == "production" and not logger.handlers:
        os.makedirs(settings.LOG_DIR, exist_ok=True)

        file_handler = logging.FileHandler(os.path.join(settings.LOG_DIR, f"{name}.log"))
        file_handler.setLevel(settings.LOG_LEVEL)

        formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        file_handler.setFormatter(formatter)

        logger.addHandler(file_handler)

    return logger


def log_scan(logger: logging.Logger, key: str, bound: int, exceptions: Sequence[int], elapsed: float) -> None:
    """
    Log a bounded representability scan.

    Args:
        logger: Logger instance
        key: Canonical key of the scanned sum or form
        bound: Upper end of the scanned range
        exceptions: Integers found not represented
        elapsed: Scan time in seconds
    """
    log_data = {
        "key": key,
        "bound": bound,
        "exception_count": len(exceptions),
        "first_exceptions": list(exceptions[:10]),
        "elapsed": round(elapsed, 6),
        "timestamp": datetime.now().isoformat(),
    }

    logger.debug(f"Scan: {json.dumps(log_data)}")


def log_escalation(logger: logging.Logger, coeffs: Sequence[int], status: str, truant: Optional[int]) -> None:
    """
    Log the evaluation of one escalation node.

    Args:
        logger: Logger instance
        coeffs: Coefficient vector of the node
        status: Node status value
        truant: Truant of the node, if any
    """
    log_data = {
        "coeffs": list(coeffs),
        "status": status,
        "truant": truant,
    }

    logger.debug(f"Escalation: {json.dumps(log_data)}")


def log_verification(logger: logging.Logger, theorem_id: str, bound: int, verdict: str, elapsed: float, details: Optional[Dict[str, Any]] = None) -> None:
    """
    Log the outcome of a theorem verification run.

    Args:
        logger: Logger instance
        theorem_id: Theorem identifier
        bound: Verification bound
        verdict: "pass" or "fail"
        elapsed: Run time in seconds
        details: Failure or claim details
    """
    log_data = {
        "theorem_id": theorem_id,
        "bound": bound,
        "verdict": verdict,
        "elapsed": round(elapsed, 3),
        "timestamp": datetime.now().isoformat(),
    }

    if details:
        log_data["details"] = details

    logger.info(f"Verification: {json.dumps(log_data)}")


def log_cache(logger: logging.Logger, event: str, details: Optional[Dict[str, Any]] = None) -> None:
    """
    Log a result-cache event (load, save, audit).

    Args:
        logger: Logger instance
        event: Event name
        details: Event details
    """
    log_data = {"event": event}

    if details:
        log_data.update(details)

    logger.info(f"Cache: {json.dumps(log_data)}")


# Create and export application loggers
engine_logger = get_logger("engine")
escalation_logger = get_logger("escalation")
verify_logger = get_logger("verify")
cli_logger = get_logger("cli")
