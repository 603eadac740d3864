"""Tests for the representation result cache."""

import json

import pytest

from octsum.core.cache import ResultCache
from octsum.models.octsum import OctSum
from octsum.utils.error_utils import CacheAuditError


@pytest.fixture
def cache_path(tmp_path):
    return tmp_path / "cache" / "results.json"


def test_cache_hit_and_miss():
    cache = ResultCache(audit_rate=0.0)
    s = OctSum.of(1, 1)

    assert cache.represents(s, 2).xs == (1, 1)
    assert cache.represents(s, 2).xs == (1, 1)
    assert cache.represents(s, 3) is None
    assert cache.stats() == {"entries": 2, "hits": 1, "misses": 2, "audits": 0}


def test_cache_key_is_canonical():
    cache = ResultCache(audit_rate=0.0)
    cache.represents(OctSum.of(2, 1), 3)
    found, value = cache.get(OctSum.of(1, 2), 3)
    assert found
    assert value == (1, 1)


def test_cache_conflicting_put():
    cache = ResultCache()
    s = OctSum.of(1)
    cache.put(s, 5, (-1,))
    cache.put(s, 5, (-1,))
    with pytest.raises(CacheAuditError):
        cache.put(s, 5, None)


def test_cache_audit_catches_bad_entry():
    cache = ResultCache(audit_rate=1.0)
    s = OctSum.of(1, 1)
    cache.put(s, 3, (0, 1))
    with pytest.raises(CacheAuditError):
        cache.represents(s, 3)


def test_cache_audit_passes_good_entry():
    cache = ResultCache(audit_rate=1.0)
    s = OctSum.of(1, 1)
    cache.represents(s, 2)
    cache.represents(s, 2)
    assert cache.audits == 1


def test_cache_persistence(cache_path):
    cache = ResultCache(path=cache_path, audit_rate=0.0)
    cache.represents(OctSum.of(1, 2), 4)
    cache.represents(OctSum.of(1, 2), 3)
    cache.save()

    data = json.loads(cache_path.read_text(encoding="utf-8"))
    assert data["entries"] == {"1,2|3": [1, 1], "1,2|4": None}

    reloaded = ResultCache(path=cache_path, audit_rate=0.0)
    assert len(reloaded) == 2
    assert reloaded.get(OctSum.of(1, 2), 3) == (True, (1, 1))


def test_cache_version_mismatch(cache_path):
    cache = ResultCache(path=cache_path, engine_version="0.0.1")
    cache.represents(OctSum.of(1), 5)
    cache.save()

    reloaded = ResultCache(path=cache_path, engine_version="0.0.2")
    assert len(reloaded) == 0
