"""
The Allcock lattice L = E^26 / K over the Eisenstein integers.

Generators eps_0..eps_12 are the points of PG(2,3) and eps_13..eps_25 its
lines, with <eps_i, eps_i> = 3, <eps_p, eps_l> = theta for incident p, l and
0 otherwise. The form is linear in the first slot. K is the kernel of the
pairing; L is represented by a complement basis of K in E^26.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import sympy
from pydantic import BaseModel, Field

from src.eisenstein.eis_int import OMEGA, ONE, THETA, ZERO, EisInt, eis_gcd, exact_div
from src.eisenstein.eis_matrix import EisMatrix, hermitian_product
from src.eisenstein.normal_forms import EISENSTEIN, INTEGERS, hermite_normal_form, mat_mul, smith_normal_form
from src.geometry.projective_plane import ProjectivePlane, build_plane
from src.lattice.lorentz import SymMatrix, signature
from src.utils.errors import LatticeStructureError
from src.utils.logger import log_anomaly, log_system

Vector = list[EisInt]


def allcock_gram(plane: ProjectivePlane | None = None) -> EisMatrix:
    plane = plane or build_plane(3)
    n = plane.size
    rows = [[ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(2 * n):
        rows[i][i] = EisInt(3)
    for p, l in plane.flags():
        rows[p][n + l] = THETA
        rows[n + l][p] = THETA.conj()
    return EisMatrix.of(rows)


def unit_vector(size: int, index: int, scalar: EisInt = ONE) -> Vector:
    v = [ZERO] * size
    v[index] = scalar
    return v


def vec_add(x: Vector, y: Vector) -> Vector:
    return [a + b for a, b in zip(x, y)]


def vec_scale(c: EisInt, x: Vector) -> Vector:
    return [c * a for a in x]


def row_times(x: Vector, m: EisMatrix) -> Vector:
    return list((EisMatrix.of([x]) @ m).rows[0])


def _content(x: Vector) -> EisInt:
    return reduce(eis_gcd, x, ZERO)


def _without_content(x: Vector) -> Vector:
    g = _content(x)
    if g.is_zero() or g.is_unit():
        return list(x)
    return [exact_div(a, g) for a in x]


def _lcm(a: EisInt, b: EisInt) -> EisInt:
    return exact_div(a * b, eis_gcd(a, b))


def left_kernel(g: EisMatrix) -> list[Vector]:
    """Vectors x with x G = 0, one per free column, by fraction-free elimination on G^T."""
    rows = [_without_content(list(r)) for r in g.transpose().rows]
    width = g.shape[0]
    pivots: list[int] = []
    top = 0
    for col in range(width):
        candidates = [i for i in range(top, len(rows)) if not rows[i][col].is_zero()]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: rows[i][col].norm())
        rows[top], rows[best] = rows[best], rows[top]
        pivot_row = rows[top]
        a = pivot_row[col]
        for i in range(len(rows)):
            if i == top or rows[i][col].is_zero():
                continue
            b = rows[i][col]
            rows[i] = _without_content([a * x - b * y for x, y in zip(rows[i], pivot_row)])
        pivots.append(col)
        top += 1
        if top == len(rows):
            break

    free = [c for c in range(width) if c not in pivots]
    scale = reduce(_lcm, (rows[i][c] for i, c in enumerate(pivots)), ONE)
    kernel = []
    for f in free:
        x = [ZERO] * width
        x[f] = scale
        for i, c in enumerate(pivots):
            x[c] = -(rows[i][f] * exact_div(scale, rows[i][c]))
        kernel.append(_without_content(x))
    return kernel


@dataclass
class EisLattice:
    gram: EisMatrix
    raw_kernel: list[Vector]
    kernel: list[Vector]
    basis: list[Vector]
    to_coordinates: list[Vector]
    raw_elementary_divisors: list[EisInt]
    gram_rank: int
    kernel_hnf: list[Vector] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def generator_count(self) -> int:
        return self.gram.shape[0]

    def product(self, x: Vector, y: Vector) -> EisInt:
        return hermitian_product(x, y, self.gram)

    def in_kernel(self, x: Vector) -> bool:
        return all(v.is_zero() for v in row_times(x, self.gram))

    def coordinates(self, x: Vector) -> Vector:
        """Coordinates of x mod K in the basis."""
        full = row_times(x, EisMatrix.of(self.to_coordinates))
        return full[len(self.kernel) :]

    def lift(self, coordinates: Vector) -> Vector:
        out = [ZERO] * self.generator_count
        for c, b in zip(coordinates, self.basis):
            if not c.is_zero():
                out = vec_add(out, vec_scale(c, b))
        return out

    def hermitian_gram(self) -> EisMatrix:
        b = EisMatrix.of(self.basis)
        return b @ self.gram @ b.conj_transpose()


def kernel_and_basis(g: EisMatrix, expected_rank: int = 14) -> EisLattice:
    """
    Raises:
        LatticeStructureError: The rank is wrong, a kernel row fails to
            annihilate G, or the Gram matrix of the basis is singular.
    """
    if not g.is_hermitian():
        raise LatticeStructureError("Gram matrix is not Hermitian")
    size = g.shape[0]
    raw = left_kernel(g)
    for r in raw:
        if not all(v.is_zero() for v in row_times(r, g)):
            raise LatticeStructureError("kernel row does not annihilate the Gram matrix")
    if size - len(raw) != expected_rank:
        raise LatticeStructureError(f"lattice rank {size - len(raw)}, expected {expected_rank}")

    snf = smith_normal_form(EISENSTEIN, [list(r) for r in raw])
    k = len(raw)
    kernel = [list(r) for r in snf.q_inv[:k]]
    basis = [list(r) for r in snf.q_inv[k:]]
    # the first k rows of Q^-1 span the saturation of the raw kernel
    if not all(all(v.is_zero() for v in row_times(r, g)) for r in kernel):
        raise LatticeStructureError("saturated kernel row does not annihilate the Gram matrix")

    gram_rank = smith_normal_form(EISENSTEIN, [list(r) for r in g.rows]).rank
    lattice = EisLattice(
        gram=g,
        raw_kernel=raw,
        kernel=kernel,
        basis=basis,
        to_coordinates=[list(r) for r in snf.q],
        raw_elementary_divisors=snf.invariants(),
        gram_rank=gram_rank,
        kernel_hnf=hermite_normal_form(EISENSTEIN, kernel).h,
    )
    if lattice.hermitian_gram().determinant().is_zero():
        raise LatticeStructureError("basis Gram matrix is singular")
    log_system(f"[Allcock] rank {lattice.rank}, kernel rank {k}, Gram rank {gram_rank}")
    return lattice


def _twice_real_part(x: EisInt) -> int:
    # 2 Re(a + b w) = 2a - b
    return 2 * x.a - x.b


def realified_gram(h: EisMatrix) -> SymMatrix:
    """2 Re <,> on the Z-basis b_0, w b_0, b_1, w b_1, ..."""
    n = h.shape[0]
    scalars = (ONE, OMEGA)
    entries = []
    for i in range(2 * n):
        k, s = divmod(i, 2)
        row = []
        for j in range(2 * n):
            l, t = divmod(j, 2)
            row.append(Fraction(_twice_real_part(scalars[s] * scalars[t].conj() * h[k, l])))
        entries.append(tuple(row))
    return SymMatrix(tuple(entries))


class DiscriminantReport(BaseModel):
    determinant: int
    signature: tuple[int, int]
    realified_inertia: tuple[int, int, int]


def discriminant_and_signature(lattice: EisLattice) -> DiscriminantReport:
    """
    Raises:
        LatticeStructureError: The determinant is not a rational integer.
    """
    h = lattice.hermitian_gram()
    det = h.determinant()
    if not det.is_rational():
        raise LatticeStructureError(f"Hermitian determinant {det} is not rational")
    plus, zero, minus = signature(realified_gram(h))
    if plus % 2 or minus % 2 or zero:
        raise LatticeStructureError(f"realified inertia {(plus, zero, minus)} is not a doubled signature")
    return DiscriminantReport(
        determinant=det.a, signature=(plus // 2, minus // 2), realified_inertia=(plus, zero, minus)
    )


def generator_signs(lattice: EisLattice) -> list[int]:
    half = lattice.generator_count // 2
    return [1] * half + [-1] * half


def sigma(x: Vector, signs: list[int]) -> Vector:
    """Anti-linear involution: eps_p -> eps_p, eps_l -> -eps_l."""
    return [EisInt(s) * v.conj() for s, v in zip(signs, x)]


def _to_z(coordinates: Vector) -> list[int]:
    out = []
    for c in coordinates:
        out += [c.a, c.b]
    return out


def _from_z(v: list[int]) -> Vector:
    return [EisInt(v[2 * i], v[2 * i + 1]) for i in range(len(v) // 2)]


def sigma_matrix(lattice: EisLattice) -> list[list[int]]:
    """Integer matrix of sigma on the Z-basis b_0, w b_0, ...; row r is the image of basis element r."""
    signs = generator_signs(lattice)
    rows = []
    for b in lattice.basis:
        image = lattice.coordinates(sigma(b, signs))
        rows.append(_to_z(image))
        rows.append(_to_z([OMEGA.conj() * c for c in image]))
    return rows


class RealFormReport(BaseModel):
    sigma_preserves_kernel: bool
    sigma_involution: bool
    anti_isometry: bool
    fixed_rank: int
    values_in_3z: bool
    gram: list[list[int]]
    determinant: int
    signature: tuple[int, int, int]
    odd: bool
    membership: dict[str, bool] = Field(default_factory=dict)
    membership_norms: dict[str, int] = Field(default_factory=dict)


def real_form(lattice: EisLattice, plane: ProjectivePlane | None = None) -> RealFormReport:
    """
    L_r as the sigma-fixed Z-submodule of L with (x, y) = <x, y> / 3.

    Raises:
        LatticeStructureError: The fixed module does not have rank 14.
    """
    plane = plane or build_plane(3)
    signs = generator_signs(lattice)
    size = lattice.generator_count

    preserves_kernel = all(lattice.in_kernel(sigma(k, signs)) for k in lattice.kernel)
    involution = all(sigma(sigma(b, signs), signs) == b for b in lattice.basis)
    anti_isometry = all(
        EisInt(signs[i] * signs[j]) * lattice.gram[i, j] == lattice.gram[i, j].conj()
        for i in range(size)
        for j in range(size)
    )

    s = sigma_matrix(lattice)
    n = len(s)
    shifted = [[s[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    snf = smith_normal_form(INTEGERS, shifted)
    fixed = [list(row) for row in snf.p[snf.rank :]]
    if len(fixed) != lattice.rank:
        raise LatticeStructureError(f"sigma-fixed module has rank {len(fixed)}, expected {lattice.rank}")
    if mat_mul(INTEGERS, fixed, shifted) != [[0] * n for _ in fixed]:
        raise LatticeStructureError("fixed module rows are not fixed by sigma")

    elements = [lattice.lift(_from_z(v)) for v in fixed]
    values = [[lattice.product(x, y) for y in elements] for x in elements]
    in_3z = all(v.is_rational() and v.a % 3 == 0 for row in values for v in row)
    if not in_3z:
        log_anomaly("[Allcock] L_r products are not all in 3Z")
    gram = [[v.a // 3 for v in row] for row in values]
    determinant = int(sympy.Matrix(gram).det())
    inertia = signature(SymMatrix(tuple(tuple(row) for row in gram)))

    def fixed_in_l(x: Vector) -> bool:
        return lattice.in_kernel([a - b for a, b in zip(sigma(x, signs), x)])

    membership, norms = {}, {}
    half = plane.size
    for p in range(half):
        x = unit_vector(size, p)
        membership[f"eps_p{p}"] = fixed_in_l(x)
        norms[f"eps_p{p}"] = lattice.product(x, x).a // 3
    for l in range(half):
        x = unit_vector(size, half + l, THETA)
        membership[f"theta*eps_l{l}"] = fixed_in_l(x)
        norms[f"theta*eps_l{l}"] = lattice.product(x, x).a // 3

    log_system(f"[Allcock] L_r: rank {len(fixed)}, det {determinant}, inertia {inertia}")
    return RealFormReport(
        sigma_preserves_kernel=preserves_kernel,
        sigma_involution=involution,
        anti_isometry=anti_isometry,
        fixed_rank=len(fixed),
        values_in_3z=in_3z,
        gram=gram,
        determinant=determinant,
        signature=inertia,
        odd=any(gram[i][i] % 2 for i in range(len(gram))),
        membership=membership,
        membership_norms=norms,
    )


def triflection(eps: Vector, lam: Vector, lattice: EisLattice) -> Vector:
    """
    t_eps(lam) = lam + (w - 1) <lam, eps> / <eps, eps> * eps for a norm-3 root eps.

    Raises:
        LatticeStructureError: eps does not have norm 3.
        EisensteinDivisionError: (w - 1) <lam, eps> is not divisible by 3.
    """
    if lattice.product(eps, eps) != EisInt(3):
        raise LatticeStructureError("triflection needs a root of norm 3")
    coefficient = exact_div((OMEGA - ONE) * lattice.product(lam, eps), EisInt(3))
    if coefficient.is_zero():
        return list(lam)
    return vec_add(lam, vec_scale(coefficient, eps))


class TriflectionReport(BaseModel):
    generator: int
    eigenvalue_omega: bool
    order_three: bool
    unitary: bool
    fixes_kernel: bool
    fixes_orthogonal_generators: bool

    @property
    def passed(self) -> bool:
        return all((self.eigenvalue_omega, self.order_three, self.unitary, self.fixes_kernel, self.fixes_orthogonal_generators))


def triflection_checks(lattice: EisLattice) -> list[TriflectionReport]:
    size = lattice.generator_count
    generators = [unit_vector(size, i) for i in range(size)]
    reports = []
    for i, eps in enumerate(generators):
        images = [triflection(eps, g, lattice) for g in generators]
        cubed = [triflection(eps, triflection(eps, x, lattice), lattice) for x in images]
        reports.append(
            TriflectionReport(
                generator=i,
                eigenvalue_omega=images[i] == vec_scale(OMEGA, eps),
                order_three=cubed == generators,
                unitary=all(
                    lattice.product(images[j], images[k]) == lattice.gram[j, k]
                    for j in range(size)
                    for k in range(size)
                ),
                fixes_kernel=all(triflection(eps, k, lattice) == k for k in lattice.kernel),
                fixes_orthogonal_generators=all(
                    images[j] == generators[j] for j in range(size) if lattice.gram[i, j].is_zero()
                ),
            )
        )
    return reports
