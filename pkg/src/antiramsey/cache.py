"""Append-only cache of exact search results, one JSON record per line."""

from __future__ import annotations

import fcntl
import json
import os
from pathlib import Path

from .coloring import EdgeColoring
from .graphs import parse_literal, to_literal
from .search import EXACT, SearchOutcome

ENV_VAR = "ANTIRAMSEY_CACHE_DIR"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "antiramsey"


def make_key(kind: str, n: int, codes) -> str:
    return f"{kind}:{n}:" + "+".join(sorted(c.hex() for c in codes))


class ResultCache:
    def __init__(self, directory=None):
        self.path = Path(directory or default_dir()) / "results.jsonl"

    def get(self, key: str) -> SearchOutcome | None:
        if not self.path.exists():
            return None
        found = None
        with open(self.path, encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_SH)
            for line in fh:
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError:
                    continue  # torn line from an interrupted writer
                if rec.get("key") == key:
                    found = rec
        if found is None:
            return None
        if found["witness_kind"] == "coloring":
            witness = EdgeColoring(found["n"], tuple(found["witness"]))
        else:
            witness = parse_literal(found["witness"])
        return SearchOutcome(found["value"], witness, found["nodes"], found["elapsed"], "cached",
                             found["kind"])

    def put(self, key: str, n: int, outcome: SearchOutcome) -> bool:
        """Store an exact outcome; anything else is refused."""
        if outcome.status != EXACT:
            return False
        if isinstance(outcome.witness, EdgeColoring):
            wk, w = "coloring", list(outcome.witness.colors)
        else:
            wk, w = "graph", to_literal(outcome.witness)
        rec = {"elapsed": round(outcome.elapsed, 6), "key": key, "kind": outcome.kind, "n": n,
               "nodes": outcome.nodes_explored, "value": outcome.value, "witness": w,
               "witness_kind": wk}
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
        return True
