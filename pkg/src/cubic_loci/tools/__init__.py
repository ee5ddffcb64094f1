"""Deterministic serialization helpers."""

from cubic_loci.tools.canonicalize import canonicalize, hash_canonical, jsonable

__all__ = ["canonicalize", "hash_canonical", "jsonable"]
