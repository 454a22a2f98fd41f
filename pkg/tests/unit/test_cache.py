import pytest

from app.universes import hierarchy
from app.universes.hierarchy import tree_of
from app.zf import equality
from app.zf.cache import LruCache
from app.zf.equality import cache_size, eq_v
from app.zf.vset import from_children, numeral


def test_least_recently_used_entry_is_evicted():
    cache = LruCache(2)
    cache.put("a", 1)
    cache.put("b", 2)
    assert cache.get("a") == 1
    cache.put("c", 3)
    assert "b" not in cache
    assert cache.get("a") == 1 and cache.get("c") == 3
    assert len(cache) == 2


def test_stored_none_differs_from_a_miss():
    cache = LruCache(1)
    missing = object()
    assert cache.get("k", missing) is missing
    cache.put("k", None)
    assert cache.get("k", missing) is None


def test_size_must_be_positive():
    with pytest.raises(ValueError):
        LruCache(0)


def test_equality_cache_stays_bounded(monkeypatch):
    monkeypatch.setattr(equality, "_EQ_CACHE", LruCache(8))
    for n in range(40):
        fresh = from_children([numeral(n), numeral(n + 1)])
        eq_v(fresh, from_children([numeral(n + 1), numeral(n)]))
        eq_v(fresh, from_children([numeral(n)]))
    assert cache_size() <= 8


def test_tree_cache_stays_bounded(monkeypatch):
    small = LruCache(4)
    monkeypatch.setattr(hierarchy, "_TREES", small)
    for n in range(20):
        assert tree_of(numeral(n), 0) is not None
    assert len(small) == 4
