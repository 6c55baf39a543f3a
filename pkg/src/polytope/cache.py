"""Content-addressed JSON cache for vertex catalogs."""
from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Callable

from pydantic import BaseModel, ValidationError

from src import __version__
from src.polytope.chamber import ChamberP, VertexCertificate
from src.utils.helpers import canonical_json
from src.utils.logger import log_anomaly, log_system


class VertexCatalogFile(BaseModel):
    n: int
    tag: str
    toolkit_version: str
    vertices: list[VertexCertificate]


def cache_tag(chamber: ChamberP) -> str:
    """First 16 hex digits of the SHA-256 of the version, the plane and the wall roots."""
    payload = {
        "version": __version__,
        "plane": chamber.plane.to_json(),
        "walls": [list(w.coords) for w in chamber.wall_roots],
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()[:16]


def cache_path(cache_dir: str | Path, chamber: ChamberP) -> Path:
    return Path(cache_dir) / f"vertices_n{chamber.n}_{cache_tag(chamber)}.json"


def _still_valid(chamber: ChamberP, vertices: list[VertexCertificate]) -> bool:
    return all(chamber.contains(v.vector) for v in vertices)


def load_vertices(cache_dir: str | Path, chamber: ChamberP) -> list[VertexCertificate] | None:
    path = cache_path(cache_dir, chamber)
    if not path.exists():
        return None
    try:
        with open(path, encoding="utf-8") as f:
            stored = VertexCatalogFile.model_validate_json(f.read())
    except (OSError, ValidationError, ValueError) as e:
        log_anomaly(f"[Cache] unreadable vertex catalog {path}: {e}")
        return None
    if stored.tag != cache_tag(chamber) or stored.n != chamber.n or not _still_valid(chamber, stored.vertices):
        log_anomaly(f"[Cache] stale vertex catalog {path}, recomputing")
        return None
    log_system(f"[Cache] loaded {len(stored.vertices)} vertices from {path}")
    return stored.vertices


def save_vertices(cache_dir: str | Path, chamber: ChamberP, vertices: list[VertexCertificate]) -> Path:
    path = cache_path(cache_dir, chamber)
    path.parent.mkdir(parents=True, exist_ok=True)
    stored = VertexCatalogFile(n=chamber.n, tag=cache_tag(chamber), toolkit_version=__version__, vertices=vertices)
    with open(path, "w", encoding="utf-8") as f:
        f.write(canonical_json(stored))
    log_system(f"[Cache] wrote {len(vertices)} vertices to {path}")
    return path


def cached_vertices(
    chamber: ChamberP,
    compute: Callable[[], list[VertexCertificate]],
    cache_dir: str | Path | None,
) -> list[VertexCertificate]:
    """Load the catalog from cache_dir if valid, otherwise compute and store it. None disables the cache."""
    if cache_dir is None:
        return compute()
    vertices = load_vertices(cache_dir, chamber)
    if vertices is None:
        vertices = compute()
        save_vertices(cache_dir, chamber, vertices)
    return vertices
