"""Verified witness families inside stabilizer intersections.

Three constructions, all emitted through fail-fast verification:

* first-row shears ``(1, f; 0, I)`` built from functionals annihilating
  the first columns of the conjugating matrices; each emission is checked
  to lie in every conjugated stabilizer exactly;
* Eichler transvections attached to isotropic pairs in the complement of
  a finite set of vectors under a split bilinear form;
* upper block-unipotent matrices ``(I, A; 0, I)`` over the symmetry class
  admitted by the form, restricted to those fixing a prescribed image
  vector.

Verification is mandatory on emission, never sampled: a witness that
fails its defining identity raises ``IdentityViolation``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterator

from .errors import IdentityViolation
from .groups import BilinearForm, preserves_form
from .matrix import Matrix, assemble_block, outer_product, unit_vector, vec_dot, vec_neg
from .normal_forms import (
    KernelModule,
    annihilating_functionals,
    combination_stream,
    kernel_basis,
)
from .rings import Ring


class StabilizerContext:
    """A tuple of conjugating matrices with their cached first-column data.

    The identity conjugator is implicit: the constraint vectors are the
    first standard basis vector followed by the first columns of the
    conjugators.  Conjugators must be invertible and, when a form is
    attached, must preserve it.
    """

    def __init__(self, ring: Ring, size: int, conjugators=(), form: BilinearForm | None = None):
        self.ring = ring
        self.size = size
        self.form = form
        self.conjugators = tuple(conjugators)
        if form is not None and form.size != size:
            raise ValueError("form rank does not match the context size")
        for g in self.conjugators:
            if g.ring != ring:
                raise ValueError("conjugator ring mismatch")
            if g.rows != size or g.cols != size:
                raise ValueError("conjugator size mismatch")
            if form is not None and not preserves_form(g, form):
                raise ValueError("conjugator does not preserve the form")
        self.inverses = tuple(g.inverse() for g in self.conjugators)  # validates det
        self.first_column_images = tuple(g.column(0) for g in self.conjugators)

    @property
    def e1(self) -> tuple:
        return unit_vector(self.ring, self.size, 0)

    @property
    def constraint_vectors(self) -> tuple:
        """e1 (the implicit identity conjugator) followed by the images."""
        return (self.e1,) + self.first_column_images

    @property
    def projected_images(self) -> tuple:
        """The images with their first coordinate dropped (the part a
        first-row shear must annihilate)."""
        return tuple(img[1:] for img in self.first_column_images)


@dataclass(frozen=True)
class ShearWitness:
    """The matrix (1, f; 0, I) adding f(tail of v) to the first coordinate."""

    functional: tuple
    matrix: Matrix


def stabilizer_check(m: Matrix) -> bool:
    """Whether M fixes the first standard basis vector (first column e1)."""
    if not m.is_square():
        raise ValueError("stabilizer check needs a square matrix")
    return m.column(0) == unit_vector(m.ring, m.rows, 0)


def build_shear(ring: Ring, n: int, functional) -> ShearWitness:
    """First-row shear for a functional on the last n-1 coordinates."""
    functional = tuple(functional)
    if n < 2:
        raise ValueError("shears need size at least 2")
    if len(functional) != n - 1:
        raise ValueError(f"functional length {len(functional)} != {n - 1}")
    for c in functional:
        ring.check(c)
    grid = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    for j, c in enumerate(functional):
        grid[0][j + 1] = c
    matrix = Matrix(ring, grid)
    if not stabilizer_check(matrix):
        raise IdentityViolation("shear does not fix e1")
    return ShearWitness(functional, matrix)


def intersection_witnesses(ctx: StabilizerContext, count: int) -> Iterator[ShearWitness]:
    """Shears lying in the stabilizer of e1 and in every conjugated copy.

    Functionals come from the annihilator of the projected images; each
    shear is verified via g^-1 * T * g * e1 == e1 for every conjugator
    before it is yielded.  The stream is infinite over an infinite ring
    whenever the number of conjugators is at most size - 2.
    """
    ring = ctx.ring
    n = ctx.size
    e1 = ctx.e1
    for functional in annihilating_functionals(ring, n - 1, ctx.projected_images, count):
        witness = build_shear(ring, n, functional)
        for g, g_inv in zip(ctx.conjugators, ctx.inverses):
            moved = g_inv.apply(witness.matrix.apply(g.column(0)))
            if moved != e1:
                raise IdentityViolation("shear escaped a conjugated stabilizer")
        yield witness


def conjugate_by_stabilizer(
    witness: ShearWitness, q: Matrix, ctx: StabilizerContext
) -> ShearWitness:
    """Conjugate a shear by a stabilizer element q = (1, x; 0, A).

    The result is the shear with functional f*A; the exact identity
    q * result == witness * q is asserted (equivalent to result being the
    conjugate q^-1 * witness * q, q being invertible), as is f*A
    annihilating every projected image.  A failed assertion means a
    broken identity, never a bad input.
    """
    ring = ctx.ring
    n = ctx.size
    if q.rows != n or q.cols != n or q.ring != ring:
        raise ValueError("conjugator does not match the context")
    if not stabilizer_check(q):
        raise ValueError("conjugator is not a stabilizer element (first column != e1)")
    if ring.unit_inverse(q.det()) is None:
        raise ValueError("conjugator is not invertible")
    for img in ctx.first_column_images:
        if q.apply(img) != img:
            raise ValueError("conjugator does not fix the conjugated images")
    lower = Matrix(ring, [row[1:] for row in q.entries[1:]])
    functional = tuple(
        vec_dot(ring, witness.functional, lower.column(j)) for j in range(n - 1)
    )
    result = build_shear(ring, n, functional)
    if q @ result.matrix != witness.matrix @ q:
        raise IdentityViolation("conjugated shear failed q * T' == T * q")
    for u in ctx.projected_images:
        if vec_dot(ring, functional, u) != ring.zero:
            raise IdentityViolation("conjugated functional does not annihilate an image")
    return result


def complement_module(form: BilinearForm, vectors) -> KernelModule:
    """The module of v pairing to zero with every given vector.

    Computed as the kernel of the stacked pairing rows; every generator is
    re-checked against both pairing orders.
    """
    ring = form.ring
    size = form.size
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != size:
            raise ValueError("constraint vector length does not match the form")
    if not vectors:
        basis = tuple(unit_vector(ring, size, i) for i in range(size))
        return KernelModule(ring, size, basis)
    gram_t = form.gram.transpose()
    rows = [gram_t.apply(v) for v in vectors]  # row i = v_i^T * gram
    kernel = kernel_basis(Matrix(ring, rows))
    for gen in kernel.basis:
        for v in vectors:
            if form.pairing(gen, v) != ring.zero or form.pairing(v, gen) != ring.zero:
                raise IdentityViolation("complement generator fails to pair to zero")
    return kernel


def _require_isotropic(form: BilinearForm, u: tuple, v: tuple):
    ring = form.ring
    if form.pairing(u, v) != ring.zero:
        raise ValueError("transvection needs <u, v> = 0")
    if form.kind == "orthogonal":
        if form.pairing(u, u) != ring.zero or form.pairing(v, v) != ring.zero:
            raise ValueError("transvection needs isotropic u and v")


def transvection(form: BilinearForm, u, v) -> Matrix:
    """The map x -> x + eps*u<v, x> - v<u, x> on an isotropic pair."""
    ring = form.ring
    u, v = tuple(u), tuple(v)
    _require_isotropic(form, u, v)
    gram_t = form.gram.transpose()
    row_v = gram_t.apply(v)  # <v, x> = row_v . x
    row_u = gram_t.apply(u)
    eps_u = u if form.epsilon == 1 else vec_neg(ring, u)
    m = Matrix.identity(ring, form.size) + outer_product(ring, eps_u, row_v) - outer_product(
        ring, v, row_u
    )
    if not preserves_form(m, form):
        raise IdentityViolation("transvection failed form preservation")
    return m


def transvection_short(form: BilinearForm, v, r) -> Matrix:
    """The map x -> x - r*v<v, x> on the symplectic side; identity on the
    orthogonal side."""
    ring = form.ring
    v = tuple(v)
    ring.check(r)
    if form.pairing(v, v) != ring.zero:
        raise ValueError("short transvection needs isotropic v")
    if form.epsilon == 1:
        return Matrix.identity(ring, form.size)
    row_v = form.gram.transpose().apply(v)
    scaled = tuple(ring.mul(r, c) for c in v)
    m = Matrix.identity(ring, form.size) - outer_product(ring, scaled, row_v)
    if not preserves_form(m, form):
        raise IdentityViolation("short transvection failed form preservation")
    return m


def transvection_fixes_constraints(ctx: StabilizerContext, u, v, r=None) -> bool:
    """Assert that the transvections of an isotropic pair from the
    complement fix every constraint vector of the context."""
    if ctx.form is None:
        raise ValueError("context carries no form")
    ring = ctx.ring
    t = transvection(ctx.form, u, v)
    ts = transvection_short(ctx.form, v, r if r is not None else ring.one)
    for w in ctx.constraint_vectors:
        if t.apply(w) != w:
            raise IdentityViolation("transvection moved a constraint vector")
        if ts.apply(w) != w:
            raise IdentityViolation("short transvection moved a constraint vector")
    return True


def _symmetry_parameters(form: BilinearForm) -> list[tuple[int, int]]:
    # free positions (i, j), 0-based, i <= j; the mirrored entry is implied
    n = form.n
    if form.kind == "symplectic":
        return [(i, j) for i in range(n) for j in range(i, n)]
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _block_from_parameters(form: BilinearForm, params: tuple) -> Matrix:
    ring = form.ring
    n = form.n
    grid = [[ring.zero] * n for _ in range(n)]
    for (i, j), value in zip(_symmetry_parameters(form), params):
        grid[i][j] = value
        if i != j:
            grid[j][i] = value if form.kind == "symplectic" else ring.neg(value)
    return Matrix(ring, grid)


def block_unipotent_witnesses(ctx: StabilizerContext, g: Matrix, count: int) -> Iterator[Matrix]:
    """Matrices (I, A; 0, I) fixing g e1, over the symmetry class the form
    admits: symmetric A (free diagonal) on the symplectic side, alternating
    A (zero diagonal) on the orthogonal side.

    Writing g e1 = (x, y), the condition is A y = 0; the stream walks the
    kernel of the parameter-to-(A y) map and verifies each emission fixes
    g e1 and preserves the form.
    """
    form = ctx.form
    if form is None:
        raise ValueError("context carries no form")
    ring = ctx.ring
    n = form.n
    if form.kind == "orthogonal" and n < 4:
        warnings.warn("orthogonal block witnesses are intended for half-rank >= 4", stacklevel=2)
    if not preserves_form(g, form):
        raise ValueError("g does not preserve the form")
    image = g.column(0)
    y = image[n:]
    positions = _symmetry_parameters(form)
    if not positions:
        return
    # column k of the constraint matrix is (basis matrix k) * y
    columns = []
    for i, j in positions:
        col = [ring.zero] * n
        if i == j:
            col[i] = y[i]
        else:
            col[i] = y[j]
            col[j] = y[i] if form.kind == "symplectic" else ring.neg(y[i])
        columns.append(col)
    constraint = Matrix(ring, [[columns[k][r] for k in range(len(positions))] for r in range(n)])
    kernel = kernel_basis(constraint)
    identity_n = Matrix.identity(ring, n)
    zeros_n = Matrix.zeros(ring, n, n)
    for params in combination_stream(kernel, count):
        block = _block_from_parameters(form, params)
        witness = assemble_block(identity_n, block, zeros_n, identity_n)
        if witness.apply(image) != image:
            raise IdentityViolation("block witness moved g e1")
        if not preserves_form(witness, form):
            raise IdentityViolation("block witness failed form preservation")
        yield witness
