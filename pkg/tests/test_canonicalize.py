"""Tests for canonical JSON and hashing."""

import hashlib
from fractions import Fraction

import pytest

from cubic_loci.tools.canonicalize import canonicalize, hash_canonical, jsonable


def test_canonicalize_is_order_independent() -> None:
    assert canonicalize({"b": 1, "a": (2, 3)}) == '{"a":[2,3],"b":1}'
    assert hash_canonical({"b": 1, "a": 2}) == hash_canonical({"a": 2, "b": 1})


def test_hash_matches_sha256_of_canonical_text() -> None:
    payload = {"tau": 8, "witness": None}
    expected = hashlib.sha256(canonicalize(payload).encode("utf-8")).hexdigest()
    assert hash_canonical(payload) == expected


def test_large_integers_become_strings() -> None:
    assert jsonable([2**63 - 1, 2**63, -(2**64)]) == [2**63 - 1, str(2**63), str(-(2**64))]
    assert jsonable(True) is True


def test_unsupported_types_are_rejected() -> None:
    with pytest.raises(TypeError):
        jsonable(Fraction(1, 3))
