"""On-disk cache of census reports

A cached census is reused only when its metadata names the same field,
length and schema version and the stored content hash still matches.
"""

import hashlib
import json
import logging
from collections.abc import Callable
from pathlib import Path

from pydantic import ValidationError

from ..models.schemas import SCHEMA_VERSION, CensusReport

logger = logging.getLogger(__name__)


def content_hash(report: CensusReport) -> str:
    payload = json.dumps(report.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class CensusCache:
    """Census reports stored as JSON documents under one directory"""

    def __init__(self, cache_dir: str | Path):
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, p: int, n: int) -> Path:
        return self.cache_dir / f"census_p{p}_n{n}.json"

    def load(self, p: int, n: int) -> CensusReport | None:
        """Return the cached report, or None on a miss or a stale/corrupt file"""
        path = self.path_for(p, n)
        if not path.exists():
            logger.info("census cache miss: %s", path.name)
            return None
        try:
            document = json.loads(path.read_text(encoding="utf-8"))
            metadata = document["metadata"]
            if not isinstance(metadata, dict):
                raise TypeError(f"metadata is a {type(metadata).__name__}, not an object")
            report = CensusReport.model_validate(document["report"])
        except (OSError, KeyError, TypeError, json.JSONDecodeError, ValidationError) as e:
            logger.warning("ignoring unreadable census cache %s: %s", path.name, e)
            return None
        expected = {"p": p, "n": n, "version": SCHEMA_VERSION}
        if any(metadata.get(key) != value for key, value in expected.items()):
            logger.info("census cache %s is for %s, wanted %s", path.name, metadata, expected)
            return None
        if metadata.get("sha256") != content_hash(report):
            logger.warning("census cache %s failed its content hash check", path.name)
            return None
        logger.info("census cache hit: %s", path.name)
        return report

    def store(self, report: CensusReport) -> Path:
        path = self.path_for(report.p, report.n)
        document = {
            "metadata": {
                "p": report.p,
                "n": report.n,
                "version": report.version,
                "sha256": content_hash(report),
            },
            "report": report.model_dump(mode="json"),
        }
        path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        logger.info("census cached to %s", path)
        return path

    def get_or_compute(self, p: int, n: int, compute: Callable[[], CensusReport]) -> CensusReport:
        report = self.load(p, n)
        if report is None:
            report = compute()
            self.store(report)
        return report
