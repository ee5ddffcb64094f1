"""Tests for structured logging pipeline utilities."""

from __future__ import annotations

import io
import json
import logging
from logging.handlers import QueueListener
from queue import Queue
from typing import Any

import pytest

from cubic_loci import logging_pipeline
from cubic_loci.logging_pipeline import BoundedQueueHandler


def test_configure_structured_logging_emits_json() -> None:
    """Configure structured logging and verify JSON payloads are emitted."""

    logger = logging.getLogger("cubic-loci-test")
    buffer = io.StringIO()
    listener = logging_pipeline.configure_structured_logging(
        logger, trace_id="trace-123", level=logging.INFO, stream=buffer
    )

    logger.info("sample", extra={"family": "c18-c14", "witness": (4, -1, -1)})
    logging_pipeline.shutdown_listeners([listener])
    logging_pipeline.detach_queue_handlers(logger)

    payload = json.loads(buffer.getvalue().strip())
    assert payload["message"] == "sample"
    assert payload["trace_id"] == "trace-123"
    assert payload["level"] == "INFO"
    assert payload["context"]["family"] == "c18-c14"
    assert payload["context"]["witness"] == [4, -1, -1]


def test_configure_structured_logging_generates_trace_id() -> None:
    """When trace ID is omitted a random identifier should be emitted."""

    logger = logging.getLogger("cubic-loci-auto-trace")
    buffer = io.StringIO()
    listener = logging_pipeline.configure_structured_logging(logger, stream=buffer)

    logger.warning("auto-trace")
    logging_pipeline.shutdown_listeners([listener])
    logging_pipeline.detach_queue_handlers(logger)

    payload = json.loads(buffer.getvalue())
    assert isinstance(payload["trace_id"], str)
    assert payload["trace_id"]


def test_level_filters_records() -> None:
    logger = logging.getLogger("cubic-loci-quiet")
    buffer = io.StringIO()
    listener = logging_pipeline.configure_structured_logging(logger, stream=buffer)

    logger.info("hidden")
    logging_pipeline.shutdown_listeners([listener])
    logging_pipeline.detach_queue_handlers(logger)

    assert buffer.getvalue() == ""


def test_unserializable_context_falls_back_to_str() -> None:
    logger = logging.getLogger("cubic-loci-context")
    buffer = io.StringIO()
    listener = logging_pipeline.configure_structured_logging(
        logger, level=logging.INFO, stream=buffer
    )

    logger.info("odd", extra={"payload": {1, 2}})
    logging_pipeline.shutdown_listeners([listener])
    logging_pipeline.detach_queue_handlers(logger)

    payload = json.loads(buffer.getvalue())
    assert payload["context"]["payload"] == str({1, 2})


def test_detach_queue_handlers() -> None:
    logger = logging.getLogger("cubic-loci-detach")
    listener = logging_pipeline.configure_structured_logging(logger, stream=io.StringIO())
    assert any(isinstance(h, BoundedQueueHandler) for h in logger.handlers)
    logging_pipeline.shutdown_listeners([listener])
    logging_pipeline.detach_queue_handlers(logger)
    assert not any(isinstance(h, BoundedQueueHandler) for h in logger.handlers)


def test_shutdown_listeners_logs_failures(caplog: pytest.LogCaptureFixture) -> None:
    """Listener shutdown failures should emit warnings."""

    class _FailingListener(QueueListener):
        def __init__(self) -> None:
            super().__init__(Queue(), logging.StreamHandler())

        def stop(self) -> None:
            raise RuntimeError("stop failure")

    with caplog.at_level(logging.WARNING):
        logging_pipeline.shutdown_listeners([_FailingListener()])

    assert "Failed to stop logging listener" in caplog.text


def test_bounded_queue_handler_drops_when_full() -> None:
    queue: Queue[logging.LogRecord] = Queue(maxsize=1)
    record = logging.LogRecord("test", logging.INFO, "path", 1, "msg", (), None)

    class _RecordingHandler(BoundedQueueHandler):
        def __init__(self, *args: Any, **kwargs: Any) -> None:
            super().__init__(*args, **kwargs)
            self.error_handled = False

        def handleError(self, record: logging.LogRecord) -> None:
            self.error_handled = True

    BoundedQueueHandler(queue, block=False).enqueue(record)
    assert queue.full()

    handler = _RecordingHandler(queue, block=False)
    handler.enqueue(record)
    assert handler.error_handled

    blocking_queue: Queue[logging.LogRecord] = Queue(maxsize=1)
    BoundedQueueHandler(blocking_queue, block=True).enqueue(record)
    assert blocking_queue.full()
