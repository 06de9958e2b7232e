"""Dense exact matrices over a coefficient ring.

Matrices are immutable; every operation returns a fresh matrix.  The
text format used by the CLI separates rows with ``;`` and entries with
``,``, each entry in the owning ring's literal grammar.
"""

from __future__ import annotations

from .errors import NotInvertibleError, ParseError
from .rings import Integers, Modular, Ring


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: Ring, entries):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows")
        for row in grid:
            for e in row:
                ring.check(e)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, ring: Ring, grid: tuple) -> "Matrix":
        # entries already canonical (results of ring operations); skip checks
        self = object.__new__(cls)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]))
        object.__setattr__(self, "entries", grid)
        return self

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        if n < 1:
            raise ValueError("size must be positive")
        z, o = ring.zero, ring.one
        return cls._raw(ring, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        if rows < 1 or cols < 1:
            raise ValueError("dimensions must be positive")
        z = ring.zero
        return cls._raw(ring, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ring.descriptor, self.entries))

    def __repr__(self):
        return f"<matrix {self.rows}x{self.cols} over {self.ring.descriptor}: {format_matrix(self)}>"

    def _check_same_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring.descriptor} vs {other.ring.descriptor}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ring = self.ring
        add, mul, z = ring.add, ring.mul, ring.zero
        bt = tuple(zip(*other.entries))  # columns of other
        grid = []
        for row in self.entries:
            out = []
            for col in bt:
                acc = z
                for x, y in zip(row, col):
                    if x != z and y != z:
                        acc = add(acc, mul(x, y))
                out.append(acc)
            grid.append(tuple(out))
        return Matrix._raw(ring, tuple(grid))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_ring(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        add = self.ring.add
        return Matrix._raw(
            self.ring,
            tuple(tuple(add(x, y) for x, y in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        neg = self.ring.neg
        return Matrix._raw(self.ring, tuple(tuple(neg(x) for x in row) for row in self.entries))

    def scale(self, c) -> "Matrix":
        mul = self.ring.mul
        return Matrix._raw(self.ring, tuple(tuple(mul(c, x) for x in row) for row in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ring, tuple(zip(*self.entries)))

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def apply(self, vec: tuple) -> tuple:
        """Matrix-vector product A*v for a length-cols vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        ring = self.ring
        add, mul, z = ring.add, ring.mul, ring.zero
        out = []
        for row in self.entries:
            acc = z
            for x, y in zip(row, vec):
                if x != z and y != z:
                    acc = add(acc, mul(x, y))
            out.append(acc)
        return tuple(out)

    def submatrix(self, drop_row: int, drop_col: int) -> "Matrix":
        grid = tuple(
            tuple(e for j, e in enumerate(row) if j != drop_col)
            for i, row in enumerate(self.entries)
            if i != drop_row
        )
        return Matrix._raw(self.ring, grid)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        z, o = self.ring.zero, self.ring.one
        return all(
            e == (o if i == j else z)
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- determinants -------------------------------------------------------
    def det(self):
        """Exact determinant.

        Uses fraction-free (Bareiss) elimination over integral domains.
        Residue rings are handled by lifting the entries to the integers
        and reducing the result, which avoids pivoting on zero divisors.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        ring = self.ring
        if isinstance(ring, Modular):
            lifted = Matrix._raw(Integers(), self.entries)
            return lifted.det() % ring.modulus
        if not ring.is_domain:
            raise ValueError(f"determinant not supported over {ring.descriptor}")
        n = self.rows
        m = [list(row) for row in self.entries]
        z = ring.zero
        sign = 1
        prev = ring.one
        for k in range(n - 1):
            pivot_row = next((i for i in range(k, n) if m[i][k] != z), None)
            if pivot_row is None:
                return z
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]))
                    m[i][j] = ring.exact_div(num, prev)
                m[i][k] = z
            prev = m[k][k]
        result = m[n - 1][n - 1]
        return ring.neg(result) if sign < 0 else result

    def det_cofactor(self):
        """Independent determinant oracle by first-row cofactor expansion."""
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        ring = self.ring
        if self.rows == 1:
            return self.entries[0][0]
        acc = ring.zero
        for j, e in enumerate(self.entries[0]):
            if e == ring.zero:
                continue
            minor = self.submatrix(0, j).det_cofactor()
            term = ring.mul(e, minor)
            acc = ring.add(acc, ring.neg(term) if j % 2 else term)
        return acc

    def inverse(self) -> "Matrix":
        """Inverse via the adjugate and the unit inverse of the determinant."""
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        ring = self.ring
        d = self.det()
        d_inv = ring.unit_inverse(d)
        if d_inv is None:
            raise NotInvertibleError(ring.format(d))
        n = self.rows
        if n == 1:
            inv = Matrix._raw(ring, ((d_inv,),))
        else:
            grid = []
            for i in range(n):
                out = []
                for j in range(n):
                    minor = self.submatrix(j, i).det()  # adjugate: transposed cofactors
                    if (i + j) % 2:
                        minor = ring.neg(minor)
                    out.append(ring.mul(d_inv, minor))
                grid.append(tuple(out))
            inv = Matrix._raw(ring, tuple(grid))
        if not (inv @ self).is_identity():
            raise ArithmeticError("adjugate inverse failed its recheck")
        return inv


def assemble_block(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    """Assemble ``[[tl, tr], [bl, br]]`` from four conforming blocks."""
    for other in (tr, bl, br):
        tl._check_same_ring(other)
    if tl.rows != tr.rows or bl.rows != br.rows or tl.cols != bl.cols or tr.cols != br.cols:
        raise ValueError("block dimensions do not conform")
    top = tuple(r1 + r2 for r1, r2 in zip(tl.entries, tr.entries))
    bottom = tuple(r1 + r2 for r1, r2 in zip(bl.entries, br.entries))
    return Matrix._raw(tl.ring, top + bottom)


def parse_matrix(ring: Ring, text: str) -> Matrix:
    rows = []
    for row_text in text.strip().split(";"):
        cells = row_text.split(",")
        if not any(cell.strip() for cell in cells):
            raise ParseError(f"empty matrix row in {text!r}")
        rows.append([ring.parse(cell) for cell in cells])
    if len({len(r) for r in rows}) != 1:
        raise ParseError("rows of unequal length")
    return Matrix(ring, rows)


def format_matrix(m: Matrix) -> str:
    fmt = m.ring.format
    return ";".join(",".join(fmt(e) for e in row) for row in m.entries)


# -- vectors ---------------------------------------------------------------

def unit_vector(ring: Ring, n: int, index: int) -> tuple:
    """Standard basis vector (0-based index)."""
    return tuple(ring.one if i == index else ring.zero for i in range(n))


def zero_vector(ring: Ring, n: int) -> tuple:
    return tuple(ring.zero for _ in range(n))


def vec_add(ring: Ring, u: tuple, v: tuple) -> tuple:
    return tuple(ring.add(x, y) for x, y in zip(u, v))


def vec_sub(ring: Ring, u: tuple, v: tuple) -> tuple:
    return tuple(ring.sub(x, y) for x, y in zip(u, v))


def vec_scale(ring: Ring, c, u: tuple) -> tuple:
    return tuple(ring.mul(c, x) for x in u)


def vec_neg(ring: Ring, u: tuple) -> tuple:
    return tuple(ring.neg(x) for x in u)


def vec_dot(ring: Ring, u: tuple, v: tuple):
    if len(u) != len(v):
        raise ValueError("vector length mismatch")
    acc = ring.zero
    for x, y in zip(u, v):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def vec_is_zero(ring: Ring, u: tuple) -> bool:
    return all(x == ring.zero for x in u)


def outer_product(ring: Ring, col: tuple, row: tuple) -> Matrix:
    """The rank-one matrix col * row."""
    return Matrix._raw(ring, tuple(tuple(ring.mul(c, r) for r in row) for c in col))


def format_vector(ring: Ring, v: tuple) -> str:
    return ",".join(ring.format(x) for x in v)
