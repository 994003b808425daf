"""On-disk cache of computed sequence terms.

Terms are stored one file per (sequence, n) as JSON with the value as a
decimal string; a hit is byte-identical to recomputation because both
sides go through the same digit extraction.  Writes go to a temp file in
the same directory followed by an atomic rename, so a crashed run never
leaves a partial entry visible.

The cache directory comes from DUNGEONLAB_CACHE, falling back to
XDG_CACHE_HOME/dungeonlab and then ~/.cache/dungeonlab.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .digits import digits_of, nat_from_str
from .sequences import SequenceId

_SCHEMA = 1

CACHE_ENV = "DUNGEONLAB_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "dungeonlab"


class TermCache:
    """File-backed map from (sequence id, n) to exact terms."""

    def __init__(self, directory: Path | str | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _entry_path(self, seq: SequenceId, n: int) -> Path:
        return self.directory / seq.value / f"{n:08d}.json"

    def get(self, seq: SequenceId, n: int) -> int | None:
        path = self._entry_path(seq, n)
        try:
            payload = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if payload.get("schema") != _SCHEMA or payload.get("n") != n:
            return None
        term = payload.get("term")
        if not isinstance(term, str) or not term.isdigit():
            return None
        return nat_from_str(term)

    def put(self, seq: SequenceId, n: int, term: int) -> None:
        path = self._entry_path(seq, n)
        path.parent.mkdir(parents=True, exist_ok=True)
        text = digits_of(term)
        payload = json.dumps(
            {"schema": _SCHEMA, "sequence": seq.value, "oeis": seq.oeis_id, "n": n,
             "digits": len(text), "term": text}
        )
        fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{n:08d}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp_name, path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise

    def max_contiguous_n(self, seq: SequenceId, n_limit: int) -> int | None:
        """Largest n with every entry 10..n present, capped at n_limit."""
        last = None
        for n in range(10, n_limit + 1):
            if not self._entry_path(seq, n).exists():
                break
            last = n
        return last
