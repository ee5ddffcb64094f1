"""Deterministic JSON canonicalization and hashing helpers."""

from __future__ import annotations

import hashlib
import json
from collections.abc import Mapping

# Integers outside the signed 64-bit range are written as decimal strings.
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def jsonable(obj: object) -> object:
    """Return ``obj`` with tuples turned into lists and oversized integers into strings."""

    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return obj if INT64_MIN <= obj <= INT64_MAX else str(obj)
    if isinstance(obj, Mapping):
        return {str(key): jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(item) for item in obj]
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def canonicalize(obj: object) -> str:
    """
    Return deterministic JSON serialization for obj.

    Uses sort_keys and compact separators so that equal payloads hash equally.
    """
    return json.dumps(
        jsonable(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=True
    )


def hash_canonical(obj: object) -> str:
    """Return SHA-256 hex digest over the canonicalized JSON representation."""
    s = canonicalize(obj)
    return hashlib.sha256(s.encode("utf-8")).hexdigest()
