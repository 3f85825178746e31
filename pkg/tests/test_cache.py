# -*- coding: utf-8 -*-
import json
import pytest
from modules.cache import ResultCache
from modules.errors import CacheCorrupt
from modules.reports import Provenance, make_record

PROVENANCE = Provenance(module="solver", anchor="exact cover search")


def record(size=3, **inputs):
    return make_record("solve", {"family": [1, 2], **inputs}, {"size": size, "S": list(range(size))}, 0, PROVENANCE)


def witness_count_matches(entry):
    return len(entry.outputs["S"]) == entry.outputs["size"]


@pytest.fixture
def store(tmp_path):
    return ResultCache(tmp_path / "results.jsonl", verifier=witness_count_matches)


def tamper(store, change):
    lines = store.path.read_text(encoding="utf-8").splitlines()
    payload = json.loads(lines[-1])
    change(payload)
    lines[-1] = json.dumps(payload)
    store.path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def test_lookup_returns_what_was_appended(store):
    stored = record()
    store.append(stored)
    assert store.lookup(stored.key) == stored
    assert store.lookup(record(n=9).key) is None


def test_latest_record_wins(store):
    store.append(record())
    newer = record().model_copy(update={"timing": 1.5})
    store.append(newer)
    assert store.lookup(newer.key).timing == 1.5


def test_missing_file_is_empty(tmp_path):
    cache = ResultCache(tmp_path / "absent" / "results.jsonl")
    assert cache.lookup("0" * 64) is None
    assert cache.verify().checked == 0


def test_digest_mismatch_is_quarantined(store):
    stored = record()
    store.append(stored)
    tamper(store, lambda payload: payload["outputs"].update(size=2))
    assert store.lookup(stored.key) is None
    assert store.path.read_text(encoding="utf-8") == ""
    assert "digest" in store.quarantine.read_text(encoding="utf-8")


def test_failed_witness_is_quarantined(store):
    stored = record()
    store.append(stored)

    def forge(payload):
        payload["outputs"]["S"] = [0]
        payload["digest"] = make_record("solve", payload["inputs"], payload["outputs"], 0, PROVENANCE).digest

    tamper(store, forge)
    assert store.lookup(stored.key) is None
    assert "witness" in store.quarantine.read_text(encoding="utf-8")


def test_strict_lookup_raises(store):
    stored = record()
    store.append(stored)
    tamper(store, lambda payload: payload["outputs"].update(size=2))
    with pytest.raises(CacheCorrupt) as info:
        store.lookup(stored.key, strict=True)
    assert info.value.quarantine == str(store.quarantine)


def test_verify_reports_every_line(store):
    store.append(record())
    store.append(record(n=4))
    with open(store.path, "a", encoding="utf-8") as handle:
        handle.write("{not json\n")
    report = store.verify()
    assert (report.checked, report.valid) == (3, 2)
    assert report.quarantined[0]["key"] is None
    assert store.verify().checked == 2
