"""Vinberg's finite-volume criterion for a chamber given by its wall Gram diagram."""
from __future__ import annotations

from collections import Counter

from pydantic import BaseModel, Field

from src.diagrams.enumeration import (
    connected_elliptic_sets,
    connected_parabolic_sets,
    extend_parabolic,
    lanner_sets,
    parabolic_problem,
)
from src.diagrams.gram_diagram import GramDiagram, classify
from src.utils.logger import log_system


class ParabolicExtension(BaseModel):
    component: list[int]
    component_type: str
    extension: list[int] | None
    extension_type: str | None = None


class VinbergCertificate(BaseModel):
    passed: bool
    hyperbolic_rank: int
    connected_elliptic_count: int
    lanner_candidates_examined: int
    lanner_subsets: list[list[int]] = Field(default_factory=list)
    parabolic_extensions: list[ParabolicExtension] = Field(default_factory=list)
    failures: list[str] = Field(default_factory=list)

    def extension_types(self) -> dict[str, int]:
        return dict(Counter(e.extension_type for e in self.parabolic_extensions if e.extension_type))


def vinberg_finite_volume(d: GramDiagram, elliptic: list[tuple[int, ...]] | None = None) -> VinbergCertificate:
    """
    Checks (a) that no Lannér subdiagram exists and (b) that every connected
    parabolic subdiagram lies in a parabolic subdiagram of rank n - 1.

    Failure is returned as a value listing the offending subsets. ``elliptic``
    takes precomputed connected elliptic sets.
    """
    n = d.hyperbolic_rank
    if elliptic is None:
        elliptic = connected_elliptic_sets(d)
    lanner, examined = lanner_sets(d, elliptic)
    parabolic = connected_parabolic_sets(d, elliptic)
    log_system(
        f"[Vinberg] {len(elliptic)} connected elliptic, {len(parabolic)} connected parabolic, "
        f"{len(lanner)} Lannér among {examined} candidates"
    )

    failures = [f"Lannér subdiagram {list(s)} ({classify(d, s).type_label})" for s in lanner]
    extensions = []
    problem = parabolic_problem(d, parabolic, n - 1)
    for component in parabolic:
        extension = extend_parabolic(d, component, problem)
        record = ParabolicExtension(
            component=list(component),
            component_type=classify(d, component).type_label,
            extension=list(extension) if extension is not None else None,
        )
        if extension is None:
            failures.append(f"connected parabolic {list(component)} has no extension of rank {n - 1}")
        else:
            record.extension_type = classify(d, extension).type_label
        extensions.append(record)

    return VinbergCertificate(
        passed=not failures,
        hyperbolic_rank=n,
        connected_elliptic_count=len(elliptic),
        lanner_candidates_examined=examined,
        lanner_subsets=[list(s) for s in lanner],
        parabolic_extensions=extensions,
        failures=failures,
    )
