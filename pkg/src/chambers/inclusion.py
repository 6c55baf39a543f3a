"""
Inclusion certificates D ⊂ P ⊂ G.

n = 7 evaluates the 56 Gosset walls on every vertex of P and checks the
extremal rays of D against the walls of P. n = 13 reduces every vertex of P
into D and rebuilds the reduction table per catalog family.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from pydantic import BaseModel, Field

from config.reference_data import ALLOWED_REDUCTION_INDICES, REDUCTION_TABLE, TERMINAL_SIGNATURES
from src.chambers.reduction import ReductionTrace, reduce_to_D
from src.chambers.simple_roots import d_extremals, in_G7
from src.lattice.lorentz import LatticeVector
from src.polytope.catalog import CatalogFamily, family_index
from src.polytope.chamber import ChamberP, VertexCertificate
from src.utils.errors import VerificationError
from src.utils.logger import log_anomaly, log_system


class TableRow(BaseModel):
    row: int
    family: str
    type_label: str
    chain: list[str]
    expected_chain: list[str]
    members: int

    @property
    def matches(self) -> bool:
        return self.chain == self.expected_chain


class VertexRecord(BaseModel):
    vertex: list[int]
    family: str | None
    chain: list[str]
    endpoint: list[int]
    indices_used: list[int]
    in_D: bool = True


class InclusionCertificate(BaseModel):
    n: int
    passed: bool
    vertex_count: int
    failures: list[str] = Field(default_factory=list)
    d_extremals_in_P: bool | None = None
    table: list[TableRow] = Field(default_factory=list)
    table_diff: list[str] = Field(default_factory=list)
    terminal_signatures: list[str] = Field(default_factory=list)
    indices_used: list[int] = Field(default_factory=list)
    records: list[VertexRecord] = Field(default_factory=list)


def _inclusion_n7(chamber: ChamberP, vertices: list[VertexCertificate]) -> InclusionCertificate:
    failures = [f"vertex {v.vertex} is outside G" for v in vertices if not in_G7(v.vector)]
    rays = d_extremals(7)
    outside = [r for r in rays if not chamber.contains(r)]
    failures += [f"extremal ray {r} of D is outside P" for r in outside]
    return InclusionCertificate(
        n=7,
        passed=not failures,
        vertex_count=len(vertices),
        failures=failures,
        d_extremals_in_P=not outside,
    )


def _reduce_one(vertex: LatticeVector) -> ReductionTrace | str:
    try:
        return reduce_to_D(vertex, 13)
    except VerificationError as e:
        return str(e)


def _reduce_all(
    vertices: list[VertexCertificate], workers: int = 1
) -> tuple[dict[LatticeVector, ReductionTrace], list[str]]:
    vectors = [v.vector for v in vertices]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_reduce_one, vectors, chunksize=256))
    else:
        outcomes = [_reduce_one(v) for v in vectors]
    traces: dict[LatticeVector, ReductionTrace] = {}
    failures = []
    for vector, outcome in zip(vectors, outcomes):
        if isinstance(outcome, str):
            failures.append(f"vertex {list(vector.coords)}: {outcome}")
            log_anomaly(f"[Inclusion] {failures[-1]}")
        else:
            traces[vector] = outcome
    return traces, failures


def reduction_table(catalog: list[CatalogFamily], traces: dict[LatticeVector, ReductionTrace]) -> list[TableRow]:
    by_name = {f.name: f for f in catalog}
    rows = []
    for index, (name, type_label, expected) in enumerate(REDUCTION_TABLE, start=1):
        family = by_name.get(name)
        chains = sorted({tuple(traces[v].chain) for v in family.members if v in traces}) if family else []
        # members share one chain when the family is coherent; otherwise the row shows the first
        chain = list(chains[0]) if chains else []
        if len(chains) > 1:
            log_anomaly(f"[Inclusion] family {name} has {len(chains)} distinct reduction chains")
        rows.append(
            TableRow(
                row=index,
                family=name,
                type_label=type_label,
                chain=chain,
                expected_chain=list(expected),
                members=len(family.members) if family else 0,
            )
        )
    return rows


def _inclusion_n13(
    vertices: list[VertexCertificate], catalog: list[CatalogFamily], keep_records: bool, workers: int
) -> InclusionCertificate:
    traces, failures = _reduce_all(vertices, workers)
    index = family_index(catalog)
    used = set().union(*(t.indices_used for t in traces.values())) if traces else set()
    if not used <= set(ALLOWED_REDUCTION_INDICES):
        failures.append(f"reflection indices {sorted(used - set(ALLOWED_REDUCTION_INDICES))} outside 0..12")

    table = reduction_table(catalog, traces)
    diff = [
        f"row {r.row} {r.family}: {' → '.join(r.chain) or '∅'} != {' → '.join(r.expected_chain)}"
        for r in table
        if not r.matches
    ]
    failures += diff
    terminals = sorted({t.chain[-1] for t in traces.values()})
    if terminals != TERMINAL_SIGNATURES:
        failures.append(f"terminal signatures {terminals} != {TERMINAL_SIGNATURES}")

    records = []
    if keep_records:
        records = [
            VertexRecord(
                vertex=list(v.coords),
                family=index.get(v),
                chain=t.chain,
                endpoint=list(t.endpoint.coords),
                indices_used=sorted(t.indices_used),
            )
            for v, t in sorted(traces.items(), key=lambda item: item[0].coords)
        ]
    return InclusionCertificate(
        n=13,
        passed=not failures,
        vertex_count=len(vertices),
        failures=failures,
        table=table,
        table_diff=diff,
        terminal_signatures=terminals,
        indices_used=sorted(used),
        records=records,
    )


def verify_inclusion(
    chamber: ChamberP,
    vertices: list[VertexCertificate],
    catalog: list[CatalogFamily] | None = None,
    keep_records: bool = False,
    workers: int = 1,
) -> InclusionCertificate:
    """
    Args:
        chamber: P for n = 7 or 13.
        vertices: Every vertex of P.
        catalog: Vertex families, needed for n = 13 to rebuild the table.
        keep_records: Attach one record per vertex (n = 13).
        workers: Processes used for the n = 13 reductions.
    """
    if chamber.n == 7:
        cert = _inclusion_n7(chamber, vertices)
    else:
        cert = _inclusion_n13(vertices, catalog or [], keep_records, workers)
    log_system(f"[Inclusion] n={chamber.n}: {cert.vertex_count} vertices, passed={cert.passed}")
    return cert
