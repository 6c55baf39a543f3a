import json
import time
from contextlib import contextmanager
from fractions import Fraction


def to_jsonable(value):
    """Convert sets, tuples, Fractions and pydantic models into plain JSON values."""
    if hasattr(value, "model_dump"):
        return to_jsonable(value.model_dump(mode="json"))
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=_sort_key)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    return value


def _sort_key(value):
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def canonical_json(value) -> str:
    return json.dumps(to_jsonable(value), indent=2, ensure_ascii=False)


@contextmanager
def stopwatch():
    """Yields a dict whose ``elapsed_ms`` is filled in on exit."""
    record = {"elapsed_ms": 0}
    start = time.perf_counter()
    try:
        yield record
    finally:
        record["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
