"""
Reduction of a forward-cone vector of Z^(13,1) into the chamber D.

Strategy: sort the coefficients c_p = -x_p into decreasing order using the
adjacent transpositions s_1..s_12, then apply s_0 while (x, alpha_0) > 0, and
repeat. The signature string is recorded after every s_0 step.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from src.chambers.signature_string import render_signature
from src.chambers.simple_roots import gamma_simple_roots, in_D
from src.lattice.lorentz import LatticeVector, inner, norm, reflect
from src.utils.errors import NonTerminationError, VerificationError


@dataclass
class ReductionTrace:
    start: LatticeVector
    endpoint: LatticeVector | None = None
    steps: list[tuple[int, str]] = field(default_factory=list)
    indices_used: set[int] = field(default_factory=set)

    @property
    def chain(self) -> list[str]:
        """Start signature followed by the signature after each s_0 step."""
        return [render_signature(self.start)] + [s for i, s in self.steps if i == 0]

    def to_json(self) -> dict:
        return {
            "vertex": list(self.start.coords),
            "chain": self.chain,
            "endpoint": list(self.endpoint.coords) if self.endpoint else None,
            "indices_used": sorted(self.indices_used),
        }


def _sort_coefficients(x: LatticeVector, trace: ReductionTrace) -> LatticeVector:
    # bubble sort on c_p = -x_p; each swap of p, p+1 is the reflection s_p
    coords = list(x.coords)
    n = len(coords) - 1
    swapped = True
    while swapped:
        swapped = False
        for p in range(1, n):
            if -coords[p] < -coords[p + 1]:
                coords[p], coords[p + 1] = coords[p + 1], coords[p]
                trace.indices_used.add(p)
                swapped = True
    return LatticeVector(tuple(coords))


def reduce_to_D(x: LatticeVector, n: int = 13, max_steps: int = 10_000) -> ReductionTrace:
    """
    Raises:
        NonTerminationError: x_0 fails to decrease at an s_0 step, or max_steps is hit.
        VerificationError: The endpoint is not in D, or the norm changed.
    """
    roots = gamma_simple_roots(n).roots
    alpha0 = roots[0]
    trace = ReductionTrace(start=x)
    current = x
    for _ in range(max_steps):
        current = _sort_coefficients(current, trace)
        for i in range(1, n):
            if inner(current, roots[i]) > 0:
                raise VerificationError(f"sorted vector {current} still has (x, alpha_{i}) > 0")
        if inner(current, alpha0) <= 0:
            break
        reflected = reflect(alpha0, current)
        if reflected.coords[0] >= current.coords[0]:
            raise NonTerminationError(f"x_0 did not decrease at s_0: {current} -> {reflected}")
        current = reflected
        trace.indices_used.add(0)
        trace.steps.append((0, render_signature(current)))
    else:
        raise NonTerminationError(f"no endpoint for {x} after {max_steps} steps")

    if norm(current) != norm(x):
        raise VerificationError(f"reduction changed the norm of {x}")
    if not in_D(current, n):
        raise VerificationError(f"endpoint {current} of {x} is not in D")
    trace.endpoint = current
    return trace
