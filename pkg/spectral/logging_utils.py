"""Logging utilities for compact, traceable computation logging.

Provides fingerprinting and summary functions so a log line identifies the
exact tuple a number was computed for without dumping its matrices.
"""

import hashlib
import json
import logging
from typing import Any, Dict

import numpy as np

from .linalg import as_stack, unitarity_residual

logger = logging.getLogger(__name__)


def tuple_fingerprint(matrices: Any) -> str:
    """Generate a short hash of a tuple's raw complex entries.

    An 8-char prefix of SHA256 is enough for correlation across log lines.
    """
    stack = np.ascontiguousarray(as_stack(matrices))
    digest = hashlib.sha256(stack.tobytes()).hexdigest()
    return f"tp_{digest[:8]}"


def build_tuple_summary(matrices: Any) -> Dict[str, Any]:
    """Build compact metadata dict for logging."""
    stack = as_stack(matrices)
    return {
        "fingerprint": tuple_fingerprint(stack),
        "n": int(stack.shape[0]),
        "dim": int(stack.shape[1]),
        "symmetric": bool(getattr(matrices, "symmetric", False)),
        "max_unitarity_residual": max(unitarity_residual(m) for m in stack),
    }


def log_full_payload(
    logger_instance: logging.Logger, tag: str, payload: Dict[str, Any]
) -> None:
    """Log full payload to the standard logger."""
    logger_instance.debug(f"FULL_PAYLOAD [{tag}]: {json.dumps(payload, default=str)}")


def log_report_compact(
    logger_instance: logging.Logger,
    prefix: str,
    summary: Dict[str, Any],
    report: Any,
    options: Any = None,
) -> None:
    """Log a one-line JSON summary of a computation and its result.

    ``report`` may be a model with ``to_dict`` or a plain value. The solver
    options, when given, only go to the DEBUG payload.
    """
    result = report.to_dict() if hasattr(report, "to_dict") else {"value": report}
    line = dict(summary)
    line.update(result)
    logger_instance.info(f"{prefix}: {json.dumps(line, default=str)}")

    try:
        payload = dict(line)
        if options is not None:
            payload["options"] = options.model_dump(mode="json")
        log_full_payload(logger_instance, summary.get("fingerprint", prefix), payload)
    except Exception as e:
        logger.debug(f"Could not dump payload: {e}")
