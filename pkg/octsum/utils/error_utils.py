"""Utility functions for error handling."""

import traceback
import logging
from typing import Dict, Any, Optional

from ..config import settings

# Configure logger
logger = logging.getLogger(__name__)
logger.setLevel(settings.LOG_LEVEL)


def format_exception(e: Exception) -> str:
    """
    Format an exception with traceback for logging.

    Args:
        e: Exception to format

    Returns:
        Formatted exception message with traceback
    """
    return f"{type(e).__name__}: {str(e)}\n{traceback.format_exc()}"


def log_exception(e: Exception, context: Optional[str] = None) -> None:
    """
    Log an exception with context information.

    Args:
        e: Exception to log
        context: Context information
    """
    error_message = format_exception(e)
    if context:
        error_message = f"{context}: {error_message}"

    logger.error(error_message)


def handle_exception(e: Exception, context: Optional[str] = None) -> Dict[str, Any]:
    """
    Handle an exception by logging it and building an error record.

    Args:
        e: Exception to handle
        context: Context information

    Returns:
        Error data, including the process exit code to use
    """
    if isinstance(e, OctsumError):
        # no traceback for engine errors
        logger.warning(f"{context or e.error_type}: {e.message}")
        error_response = e.to_dict()
    else:
        log_exception(e, context)
        error_response = {
            "status": "error",
            "message": str(e),
            "exit_code": 2,
            "error_type": type(e).__name__
        }

    if context:
        error_response["context"] = context

    return error_response


class OctsumError(Exception):
    """Base class for engine errors."""

    def __init__(self, message: str, exit_code: int = 2, error_type: Optional[str] = None):
        """Initialize engine error."""
        self.message = message
        self.exit_code = exit_code
        self.error_type = error_type or self.__class__.__name__
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary."""
        return {
            "status": "error",
            "message": self.message,
            "exit_code": self.exit_code,
            "error_type": self.error_type
        }


class ArithmeticOverflowError(OctsumError):
    """Argument or target outside the supported exact range."""


class InvalidInputError(OctsumError):
    """Precondition violation on an operation input."""


class ParityMismatchError(InvalidInputError):
    """Parity repair called with e and b of different parity."""


class NonIntegralImageError(InvalidInputError):
    """Tau step called on a vector whose image would not be integral."""


class NormMismatchError(InvalidInputError):
    """Vector does not have the norm it claims."""


class UnknownCatalogFormError(OctsumError):
    """Form has no closed-form representation criterion."""


class UnknownTheoremError(OctsumError):
    """Theorem identifier is not in the catalogue."""


class ShallowTreeError(OctsumError):
    """Escalation tree too shallow or too weakly bounded for criterion extraction."""


class CriterionContradictionError(OctsumError):
    """A corroborating scan found an exception after all criterion integers were represented."""


class CacheAuditError(OctsumError):
    """A sampled cache hit disagrees with a fresh computation."""


class WitnessValidationError(OctsumError):
    """A returned witness does not satisfy its problem."""


class ClaimFailed(OctsumError):
    """An intermediate claim of a construction pipeline does not hold."""

    def __init__(self, claim: str, detail: str):
        self.claim = claim
        self.detail = detail
        super().__init__(f"{claim}: {detail}", exit_code=1)
