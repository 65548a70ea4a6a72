"""Persistent yes/no decision cache keyed by (S, colors) or SFT digest."""

from __future__ import annotations

import json
import os
import time


CACHE_ENV_VAR = "BORELCHI_CACHE_DIR"
CACHE_FILENAME = "results.json"


def key_for_gens(gens, colors) -> str:
    return f"S={gens};b={int(colors)}"


def key_for_sft(sft) -> str:
    return f"sft={sft.digest()}"


class ResultCache:
    """A JSON-backed map from decision keys to cached answers.

    Entries record the decision, a timestamp, and the engine version that
    produced them.  Writes go through an adjacent temp file and an atomic
    rename, so concurrent readers never see a torn file.
    """

    def __init__(self, directory):
        self.directory = str(directory)
        self.path = os.path.join(self.directory, CACHE_FILENAME)
        self._entries = {}
        self._dirty = False
        if os.path.exists(self.path):
            with open(self.path) as fh:
                self._entries = json.load(fh)

    def __len__(self):
        return len(self._entries)

    def get(self, key: str):
        """Cached decision for the key, or None when absent."""
        entry = self._entries.get(key)
        if entry is None:
            return None
        return bool(entry["decision"])

    def put(self, key: str, decision: bool):
        from . import __version__

        self._entries[key] = {
            "decision": bool(decision),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
            "engine_version": __version__,
        }
        self._dirty = True

    def save(self):
        if not self._dirty:
            return
        os.makedirs(self.directory, exist_ok=True)
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self._entries, fh, indent=0, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, self.path)
        self._dirty = False


def cache_from_options(cache_dir=None) -> ResultCache | None:
    """Open the cache named by --cache-dir or the environment, if any."""
    directory = cache_dir or os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return ResultCache(directory)
