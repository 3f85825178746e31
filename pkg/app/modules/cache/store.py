# -*- coding: utf-8 -*-
"""Append-only JSONL store of result records.

One record per line, appended whole and flushed, so a crash loses at most the line being
written. Records that fail re-verification are moved to the quarantine file and never served.
"""
import os
import threading
from pathlib import Path
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Tuple
from loguru import logger
from pydantic import ValidationError
from modules.errors import CacheCorrupt
from modules.reports import ResultRecord, canonical

Verifier = Callable[[ResultRecord], bool]


@dataclass
class CacheReport:
    checked: int = 0
    valid: int = 0
    quarantined: List[dict] = field(default_factory=list)

    def dump(self) -> dict:
        return {"checked": self.checked, "valid": self.valid, "quarantined": self.quarantined}


class ResultCache:
    """JSONL cache keyed by problem hash.

    :param path: the cache file, created on first append.
    :param quarantine: where rejected lines go, ``<path>.quarantine`` by default.
    :param verifier: re-checks the witnesses of a record; the digest is always checked.
    """

    def __init__(self, path, quarantine=None, verifier: Optional[Verifier] = None):
        self.path = Path(path)
        self.quarantine = Path(quarantine) if quarantine else self.path.with_suffix(self.path.suffix + ".quarantine")
        self.verifier = verifier
        self.lock = threading.Lock()

    def append(self, record: ResultRecord):
        line = record.to_json() + "\n"
        with self.lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(line)
                handle.flush()
                os.fsync(handle.fileno())
        logger.debug(f"cached {record.command} under {record.key[:12]}")

    def _lines(self) -> List[str]:
        if not self.path.exists():
            return []
        try:
            with open(self.path, "r", encoding="utf-8") as handle:
                return [line.rstrip("\n") for line in handle if line.strip()]
        except (OSError, UnicodeDecodeError) as ex:
            raise CacheCorrupt(f"cache {self.path} is unreadable: {ex}", str(self.quarantine)) from ex

    def entries(self) -> Iterator[Tuple[str, Optional[ResultRecord], str]]:
        """(line, record or None, problem) for every stored line."""
        for line in self._lines():
            try:
                record = ResultRecord.from_json(line)
            except (ValueError, ValidationError) as ex:
                yield line, None, f"unparseable: {str(ex).splitlines()[0]}"
                continue
            yield line, record, self.check(record)

    def check(self, record: ResultRecord) -> str:
        """Empty when the record is sound, otherwise the reason it is not."""
        if not record.intact():
            return "outputs do not match their digest"
        if self.verifier is not None:
            try:
                if not self.verifier(record):
                    return "witness re-verification failed"
            except Exception as ex:  # pylint: disable=W0718
                return f"witness re-verification raised {type(ex).__name__}: {ex}"
        return ""

    def _move_to_quarantine(self, rejected: List[Tuple[str, str]]):
        with self.lock:
            self.quarantine.parent.mkdir(parents=True, exist_ok=True)
            with open(self.quarantine, "a", encoding="utf-8") as handle:
                for line, reason in rejected:
                    handle.write(canonical({"reason": reason, "line": line}) + "\n")
            drop = {line for line, _ in rejected}
            kept = [line for line in self._lines() if line not in drop]
            temporary = self.path.with_suffix(self.path.suffix + ".tmp")
            with open(temporary, "w", encoding="utf-8") as handle:
                handle.writelines(line + "\n" for line in kept)
            os.replace(temporary, self.path)
        for _, reason in rejected:
            logger.warning(f"quarantined cache line to {self.quarantine}: {reason}")

    def lookup(self, key: str, strict: bool = False) -> Optional[ResultRecord]:
        """The latest sound record stored under ``key``, or None.

        Unsound records under the key are quarantined and skipped.

        :raises CacheCorrupt: with ``strict``, when anything under the key had to be quarantined.
        """
        found, rejected = None, []
        for line, record, problem in self.entries():
            if record is None or record.key != key:
                continue
            if problem:
                rejected.append((line, problem))
            else:
                found = record
        if rejected:
            self._move_to_quarantine(rejected)
            if strict:
                raise CacheCorrupt(f"{len(rejected)} records under {key[:12]} were quarantined", str(self.quarantine),
                                   {"reasons": [reason for _, reason in rejected]})
        logger.debug(f"cache {'hit' if found else 'miss'} for {key[:12]}")
        return found

    def verify(self) -> CacheReport:
        """Re-check every line and quarantine what fails."""
        report, rejected = CacheReport(), []
        for line, record, problem in self.entries():
            report.checked += 1
            if problem:
                rejected.append((line, problem))
                report.quarantined.append({"key": record.key if record else None, "reason": problem})
            else:
                report.valid += 1
        if rejected:
            self._move_to_quarantine(rejected)
        logger.info(f"cache check: {report.valid} of {report.checked} records sound")
        return report
