"""Hermite and Smith normal forms, kernel modules and solution streams.

The normal forms run over the Euclidean rings (Z, Zi, Fp[x]); residue
rings are handled by lifting the system to the integers, augmenting with
the modulus relations, and reducing back.  Elimination always pivots on
the entry of smallest nonzero norm (ties broken by lowest row index),
which keeps the transforms deterministic and the entries small.

Kernels are returned as ``KernelModule`` values and expanded into
pairwise-distinct solution streams by walking coefficient tuples in the
ring's documented enumeration order.  Every streamed vector is
re-verified against the defining matrix before it is emitted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import IdentityViolation, UnsupportedRingError
from .matrix import Matrix, vec_add, vec_is_zero, vec_scale
from .rings import Integers, Modular, Ring


@dataclass(frozen=True)
class KernelModule:
    """Generators of {x : A x = 0} inside ring^ambient_dim.

    Over a domain the generators are a basis (linearly independent over
    the fraction field); over a residue ring they are a generating set.
    """

    ring: Ring
    ambient_dim: int
    basis: tuple[tuple, ...]


# -- row operations on (matrix, transform) pairs ----------------------------

def _row_axpy(ring: Ring, rows: list, target: int, source: int, q):
    """rows[target] -= q * rows[source]"""
    sub, mul = ring.sub, ring.mul
    src = rows[source]
    rows[target] = [sub(x, mul(q, y)) for x, y in zip(rows[target], src)]


def _row_scale(ring: Ring, rows: list, target: int, u):
    mul = ring.mul
    rows[target] = [mul(u, x) for x in rows[target]]


def _hnf_core(ring: Ring, a_rows: list) -> tuple[list, list]:
    """Row Hermite form: returns (h, u) as lists with u*a == h."""
    m = len(a_rows)
    h = [list(row) for row in a_rows]
    u = [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]
    z = ring.zero
    r = 0
    for c in range(len(a_rows[0])):
        if r >= m:
            break
        if all(h[i][c] == z for i in range(r, m)):
            continue
        while True:
            _, pivot = min(
                (ring.norm(h[i][c]), i) for i in range(r, m) if h[i][c] != z
            )
            if pivot != r:
                h[r], h[pivot] = h[pivot], h[r]
                u[r], u[pivot] = u[pivot], u[r]
            clean = True
            for i in range(r + 1, m):
                if h[i][c] == z:
                    continue
                q, _ = ring.divmod(h[i][c], h[r][c])
                if q != z:
                    _row_axpy(ring, h, i, r, q)
                    _row_axpy(ring, u, i, r, q)
                if h[i][c] != z:
                    clean = False
            if clean:
                break
        cu = ring.canonical_unit(h[r][c])
        if cu != ring.one:
            _row_scale(ring, h, r, cu)
            _row_scale(ring, u, r, cu)
        for i in range(r):
            if h[i][c] != z:
                q, _ = ring.divmod(h[i][c], h[r][c])
                if q != z:
                    _row_axpy(ring, h, i, r, q)
                    _row_axpy(ring, u, i, r, q)
        r += 1
    return h, u


def hermite_normal_form(a: Matrix) -> tuple[Matrix, Matrix]:
    """Return (H, U) with U*A = H, det(U) a unit, H in row-echelon form.

    Pivots are normalized to their canonical associates (positive over Z,
    monic over Fp[x]) and the entries above each pivot are reduced.
    """
    ring = a.ring
    if isinstance(ring, Modular):
        ints = Integers()
        h, u = _hnf_core(ints, [list(row) for row in a.entries])
        reduce_ = ring.modulus
        to_mod = lambda rows: Matrix(ring, [[x % reduce_ for x in row] for row in rows])
        return to_mod(h), to_mod(u)
    if not ring.is_euclidean:
        raise UnsupportedRingError(f"no Hermite form over {ring.descriptor}")
    h, u = _hnf_core(ring, [list(row) for row in a.entries])
    return Matrix._raw(ring, tuple(map(tuple, h))), Matrix._raw(ring, tuple(map(tuple, u)))


def _snf_core(ring: Ring, a_rows: list) -> tuple[list, list, list]:
    m = len(a_rows)
    n = len(a_rows[0])
    d = [list(row) for row in a_rows]
    u = [[ring.one if i == j else ring.zero for j in range(m)] for i in range(m)]
    v = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    z = ring.zero

    def col_axpy(target: int, source: int, q):
        # column_target -= q * column_source, applied to d and v
        sub, mul = ring.sub, ring.mul
        for row in d:
            row[target] = sub(row[target], mul(q, row[source]))
        for row in v:
            row[target] = sub(row[target], mul(q, row[source]))

    def col_swap(i: int, j: int):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        candidates = [
            (ring.norm(d[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if d[i][j] != z
        ]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        if pi != t:
            d[t], d[pi] = d[pi], d[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            col_swap(t, pj)
        while True:
            col_clean = True
            for i in range(t + 1, m):
                if d[i][t] == z:
                    continue
                q, _ = ring.divmod(d[i][t], d[t][t])
                if q != z:
                    _row_axpy(ring, d, i, t, q)
                    _row_axpy(ring, u, i, t, q)
                if d[i][t] != z:
                    col_clean = False
            if not col_clean:
                _, pivot = min((ring.norm(d[i][t]), i) for i in range(t, m) if d[i][t] != z)
                if pivot != t:
                    d[t], d[pivot] = d[pivot], d[t]
                    u[t], u[pivot] = u[pivot], u[t]
                continue
            row_clean = True
            for j in range(t + 1, n):
                if d[t][j] == z:
                    continue
                q, _ = ring.divmod(d[t][j], d[t][t])
                if q != z:
                    col_axpy(j, t, q)
                if d[t][j] != z:
                    row_clean = False
            if not row_clean:
                _, pivot = min((ring.norm(d[t][j]), j) for j in range(t, n) if d[t][j] != z)
                if pivot != t:
                    col_swap(t, pivot)
                continue
            # pivot must divide the whole trailing block for the chain
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] == z:
                        continue
                    _, rem = ring.divmod(d[i][j], d[t][t])
                    if rem != z:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_axpy(ring, d, t, offender, ring.neg(ring.one))  # row_t += row_offender
            _row_axpy(ring, u, t, offender, ring.neg(ring.one))
        cu = ring.canonical_unit(d[t][t])
        if cu != ring.one:
            _row_scale(ring, d, t, cu)
            _row_scale(ring, u, t, cu)
    return d, u, v


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U*A*V = D diagonal, d_i | d_{i+1}, U, V unimodular."""
    ring = a.ring
    if isinstance(ring, Modular):
        ints = Integers()
        d, u, v = _snf_core(ints, [list(row) for row in a.entries])
        reduce_ = ring.modulus
        to_mod = lambda rows: Matrix(ring, [[x % reduce_ for x in row] for row in rows])
        return to_mod(d), to_mod(u), to_mod(v)
    if not ring.is_euclidean:
        raise UnsupportedRingError(f"no Smith form over {ring.descriptor}")
    d, u, v = _snf_core(ring, [list(row) for row in a.entries])
    raw = lambda rows: Matrix._raw(ring, tuple(map(tuple, rows)))
    return raw(d), raw(u), raw(v)


def kernel_basis(a: Matrix) -> KernelModule:
    """Generators of the right kernel {x : A x = 0}.

    Euclidean rings: the rows of the Hermite transform of A^T that map to
    zero rows form a basis of the kernel (complete, not just finite
    index).  Residue rings: solve A x + m k = 0 over the integers and
    project, per the augmented-congruence construction.
    """
    ring = a.ring
    if isinstance(ring, Modular):
        ints = Integers()
        m = ring.modulus
        rows = []
        for i, row in enumerate(a.entries):
            aug = [m if k == i else 0 for k in range(a.rows)]
            rows.append(list(row) + aug)
        lifted = kernel_basis(Matrix(ints, rows))
        gens = []
        seen = set()
        for vec in lifted.basis:
            proj = tuple(x % m for x in vec[: a.cols])
            if any(proj) and proj not in seen:
                seen.add(proj)
                gens.append(proj)
        for g in gens:
            if not vec_is_zero(ring, a.apply(g)):
                raise IdentityViolation("projected kernel generator failed A v = 0")
        return KernelModule(ring, a.cols, tuple(gens))
    if not ring.is_euclidean:
        raise UnsupportedRingError(f"no kernel computation over {ring.descriptor}")
    h, u = hermite_normal_form(a.transpose())
    z = ring.zero
    basis = []
    for i in range(h.rows):
        if all(x == z for x in h.row(i)):
            basis.append(u.row(i))
    for vec in basis:
        if not vec_is_zero(ring, a.apply(vec)):
            raise IdentityViolation("kernel basis vector failed A v = 0")
    return KernelModule(ring, a.cols, tuple(basis))


def coefficient_tuples(ring: Ring, k: int) -> Iterator[tuple]:
    """All k-tuples of ring elements, graded by the largest enumeration
    index appearing in the tuple; lexicographic within a grade.  Finite
    for finite rings."""
    pool: list = []
    source = ring.elements()
    grade = 0
    while True:
        while len(pool) <= grade:
            try:
                pool.append(next(source))
            except StopIteration:
                return
        for ranks in itertools.product(range(grade + 1), repeat=k):
            if grade and max(ranks) != grade:
                continue
            yield tuple(pool[r] for r in ranks)
        grade += 1


def combination_stream(kernel: KernelModule, count: int, check=None) -> Iterator[tuple]:
    """Up to ``count`` pairwise-distinct nonzero module elements spanned by
    the kernel generators, in coefficient-enumeration order."""
    if count <= 0 or not kernel.basis:
        return
    ring = kernel.ring
    width = kernel.ambient_dim
    zero = tuple(ring.zero for _ in range(width))
    seen = set()
    emitted = 0
    for coeffs in coefficient_tuples(ring, len(kernel.basis)):
        vec = zero
        for c, gen in zip(coeffs, kernel.basis):
            if c != ring.zero:
                vec = vec_add(ring, vec, vec_scale(ring, c, gen))
        if vec == zero or vec in seen:
            continue
        seen.add(vec)
        if check is not None:
            check(vec)
        yield vec
        emitted += 1
        if emitted >= count:
            return


def solution_stream(a: Matrix, count: int) -> Iterator[tuple]:
    """Pairwise-distinct nonzero solutions of A x = 0, re-verified on emission.

    The stream ends early only when the kernel is finite (finite ring or
    trivial kernel)."""
    kernel = kernel_basis(a)

    def check(vec):
        if not vec_is_zero(a.ring, a.apply(vec)):
            raise IdentityViolation("streamed solution failed A v = 0")

    yield from combination_stream(kernel, count, check)


def annihilating_functionals(ring: Ring, dim: int, constraints, count: int) -> Iterator[tuple]:
    """Row functionals f on ring^dim with f(u) = 0 for every constraint u.

    Implemented as the solution stream of the matrix whose rows are the
    constraints; with no constraints every functional qualifies."""
    vectors = [tuple(u) for u in constraints]
    for u in vectors:
        if len(u) != dim:
            raise ValueError("constraint length does not match the dimension")
    if not vectors:
        basis = tuple(
            tuple(ring.one if i == j else ring.zero for j in range(dim)) for i in range(dim)
        )
        yield from combination_stream(KernelModule(ring, dim, basis), count)
        return
    yield from solution_stream(Matrix(ring, vectors), count)


def principal_kernel_family(ring: Ring, a, b, count: int) -> Iterator[tuple]:
    """Kernel elements of the 1x2 map (x, y) -> a x + b y over rings where
    a general kernel basis is not computable: the family c * (b, -a).

    For the zero map the whole rank-2 module is streamed instead."""
    ring.check(a)
    ring.check(b)
    if a == ring.zero and b == ring.zero:
        basis = ((ring.one, ring.zero), (ring.zero, ring.one))
        yield from combination_stream(KernelModule(ring, 2, basis), count)
        return
    emitted = 0
    for c in ring.elements():
        if c == ring.zero:
            continue
        vec = (ring.mul(b, c), ring.neg(ring.mul(a, c)))
        if ring.add(ring.mul(a, vec[0]), ring.mul(b, vec[1])) != ring.zero:
            raise IdentityViolation("kernel family member failed f(v) = 0")
        yield vec
        emitted += 1
        if emitted >= count:
            return


def in_row_span(ring: Ring, rows, vec: tuple) -> bool:
    """Whether vec is a ring-linear combination of the given row vectors."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return vec_is_zero(ring, vec)
    h, _ = hermite_normal_form(Matrix(ring, rows))
    z = ring.zero
    work = list(vec)
    for row in h.entries:
        pivot_col = next((j for j, x in enumerate(row) if x != z), None)
        if pivot_col is None:
            continue
        if work[pivot_col] == z:
            continue
        q, rem = ring.divmod(work[pivot_col], row[pivot_col])
        if rem != z:
            return False
        for j in range(len(work)):
            work[j] = ring.sub(work[j], ring.mul(q, row[j]))
    return all(x == z for x in work)
