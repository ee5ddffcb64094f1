"""Structured JSON logging for the command-line front end.

Library modules only call ``logging.getLogger(__name__)``; handlers are
installed here, once, by :mod:`cubic_loci.cli`.
"""

from __future__ import annotations

import json
import logging
import logging.handlers
import sys
from datetime import datetime, timezone
from queue import Full, Queue
from typing import Iterable, TextIO, cast
from uuid import uuid4

from cubic_loci.tools.canonicalize import jsonable

LOGGER = logging.getLogger(__name__)

_STRUCTURED_RESERVED_KEYS: frozenset[str] = frozenset(
    (
        "name",
        "msg",
        "args",
        "levelname",
        "levelno",
        "pathname",
        "filename",
        "module",
        "exc_info",
        "exc_text",
        "stack_info",
        "lineno",
        "funcName",
        "created",
        "msecs",
        "relativeCreated",
        "thread",
        "threadName",
        "processName",
        "process",
        "taskName",
        "message",
    )
)


def _context_value(value: object) -> object:
    try:
        return jsonable(value)
    except TypeError:
        return str(value)


class JsonFormatter(logging.Formatter):
    """Render log records as one JSON object per line."""

    def __init__(self, *, default_trace_id: str | None = None) -> None:
        super().__init__()
        self._default_trace_id = default_trace_id

    def format(self, record: logging.LogRecord) -> str:  # noqa: D401 - inherited
        trace_id = getattr(record, "trace_id", None) or self._default_trace_id

        exception_text: str | None = None
        if record.exc_info:
            exception_text = self.formatException(record.exc_info)
        elif record.exc_text:
            exception_text = record.exc_text

        context = {
            key: _context_value(value)
            for key, value in record.__dict__.items()
            if key not in _STRUCTURED_RESERVED_KEYS and key != "trace_id"
        }

        payload: dict[str, object] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "trace_id": trace_id,
            "context": context,
        }
        if exception_text:
            payload["exception"] = exception_text

        return json.dumps(payload, default=str, sort_keys=True)


class BoundedQueueHandler(logging.handlers.QueueHandler):
    """Queue handler that reports, rather than hides, dropped records.

    With ``block=True`` enqueuing waits for space; otherwise a full queue
    routes the record to :meth:`handleError`.
    """

    def __init__(self, queue: Queue[logging.LogRecord], *, block: bool = True) -> None:
        super().__init__(queue)
        self._block = block

    def enqueue(self, record: logging.LogRecord) -> None:
        # The base class types self.queue loosely; put/put_nowait live on Queue.
        queue = cast(Queue[logging.LogRecord], self.queue)
        if self._block:
            queue.put(record)
            return
        try:
            queue.put_nowait(record)
        except Full:
            self.handleError(record)


def configure_structured_logging(
    logger: logging.Logger,
    *,
    trace_id: str | None = None,
    level: int = logging.WARNING,
    block: bool = True,
    stream: TextIO | None = None,
) -> logging.handlers.QueueListener:
    """Attach a queue-backed JSON handler to ``logger``.

    Args:
        logger: Target logger, normally ``logging.getLogger("cubic_loci")``.
        trace_id: Static trace identifier; a random one is generated if absent.
        level: Logging verbosity level.
        block: Whether to block when the queue is full.
        stream: Destination stream, ``sys.stderr`` by default so that stdout
            only ever carries command output.

    Returns:
        The started listener; stop it with :func:`shutdown_listeners`.
    """

    logger.setLevel(level)
    effective_trace_id = trace_id or str(uuid4())

    record_queue: Queue[logging.LogRecord] = Queue(maxsize=1024)
    logger.addHandler(BoundedQueueHandler(record_queue, block=block))

    stream_handler = logging.StreamHandler(stream or sys.stderr)
    stream_handler.setFormatter(JsonFormatter(default_trace_id=effective_trace_id))

    listener = logging.handlers.QueueListener(record_queue, stream_handler)
    listener.start()
    return listener


def detach_queue_handlers(logger: logging.Logger) -> None:
    """Remove every :class:`BoundedQueueHandler` previously attached to ``logger``."""

    for handler in list(logger.handlers):
        if isinstance(handler, BoundedQueueHandler):
            logger.removeHandler(handler)


def shutdown_listeners(listeners: Iterable[logging.handlers.QueueListener]) -> None:
    """Stop all queue listeners while logging shutdown errors."""
    for listener in listeners:
        try:
            listener.stop()
        except Exception as exc:  # pragma: no cover - cleanup path
            LOGGER.warning("Failed to stop logging listener", exc_info=exc)
