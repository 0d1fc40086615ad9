"""Test the census cache"""

import json

import pytest

from lcdkit.services.census_cache import CensusCache, content_hash
from lcdkit.services.oracle import census


@pytest.fixture
def cache(tmp_path):
    return CensusCache(tmp_path / "census")


@pytest.fixture
def report(gf2):
    return census(3, gf2)


class TestCensusCache:
    """Test storing, loading and invalidating cached census reports"""

    def test_miss(self, cache):
        assert cache.load(2, 3) is None

    def test_store_and_load(self, cache, report):
        path = cache.store(report)
        assert path.name == "census_p2_n3.json"
        assert cache.load(2, 3) == report

    def test_metadata(self, cache, report):
        document = json.loads(cache.store(report).read_text())
        assert document["metadata"]["p"] == 2
        assert document["metadata"]["n"] == 3
        assert document["metadata"]["sha256"] == content_hash(report)

    def test_tampered_report(self, cache, report):
        path = cache.store(report)
        document = json.loads(path.read_text())
        document["report"]["cells"][0]["lcd"] = 99
        path.write_text(json.dumps(document))
        assert cache.load(2, 3) is None

    def test_version_mismatch(self, cache, report):
        path = cache.store(report)
        document = json.loads(path.read_text())
        document["metadata"]["version"] = "0"
        path.write_text(json.dumps(document))
        assert cache.load(2, 3) is None

    def test_corrupt_file(self, cache):
        cache.path_for(2, 3).write_text("{not json")
        assert cache.load(2, 3) is None

    @pytest.mark.parametrize("document", [{"metadata": [2, 3], "report": {}}, ["metadata"], 7])
    def test_wrong_json_shape(self, cache, report, document):
        cache.store(report)
        cache.path_for(2, 3).write_text(json.dumps(document))
        assert cache.load(2, 3) is None

    def test_get_or_compute(self, cache, report):
        calls = []

        def compute():
            calls.append(1)
            return report

        assert cache.get_or_compute(2, 3, compute) == report
        assert cache.get_or_compute(2, 3, compute) == report
        assert len(calls) == 1

    def test_hash_is_stable(self, report, gf2):
        assert content_hash(report) == content_hash(census(3, gf2))
