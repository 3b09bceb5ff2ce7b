"""Multiplication-table cache: one JSON file per canonical group spec.

File schema: {"label", "order", "generators": [{"name", "index"}...],
"table": row-major list of order^2 indices}.  Tables above order 512 are
never cached, and product specs are rebuilt from their (possibly cached)
factors.  The cache is a pure optimisation; corrupt files are ignored and
rebuilt.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

from .groups import FiniteGroup

CACHE_ENV_VAR = "ENGEL_LAB_CACHE"
MAX_CACHED_ORDER = 512


def cache_dir_from_env() -> Optional[str]:
    value = os.environ.get(CACHE_ENV_VAR)
    return value if value else None


def cache_filename(canonical: str) -> str:
    safe = (
        canonical.replace(":", "_")
        .replace("(", "")
        .replace(")", "")
        .replace("x", "X")
    )
    return safe + ".json"


def group_to_json_obj(g: FiniteGroup) -> dict:
    return {
        "label": g.label,
        "order": g.order,
        "generators": [{"name": name, "index": idx} for name, idx in g.generators],
        "table": [v for row in g.table for v in row],
    }


def store_group(cache_dir: str, canonical: str, g: FiniteGroup) -> None:
    if g.order > MAX_CACHED_ORDER:
        return
    path = Path(cache_dir)
    path.mkdir(parents=True, exist_ok=True)
    target = path / cache_filename(canonical)
    payload = json.dumps(group_to_json_obj(g), sort_keys=True, indent=2) + "\n"
    target.write_text(payload, encoding="utf-8")


def load_table(cache_dir: str, canonical: str) -> Optional[list[list[int]]]:
    """Row-major table from the cache, or None when absent/unusable."""
    target = Path(cache_dir) / cache_filename(canonical)
    try:
        obj = json.loads(target.read_text(encoding="utf-8"))
        order = int(obj["order"])
        flat = obj["table"]
        if order < 1 or len(flat) != order * order:
            return None
        if any(not isinstance(v, int) or not 0 <= v < order for v in flat):
            return None
        return [flat[i * order : (i + 1) * order] for i in range(order)]
    except (OSError, ValueError, KeyError, TypeError):
        return None
