"""Exact dense linear algebra over a base field.

Vectors are plain lists of scalars; matrices are row-major lists of rows.
Subspaces are kept in reduced row-echelon form, so subspace equality is
grid equality and coefficient extraction is a direct read-off.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from zpbal.errors import AmbientMismatch, NotInSubspace
from zpbal.fields import Field, Scalar

Vector = List[Scalar]


def zero_vector(field: Field, n: int) -> Vector:
    return [field.zero] * n


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field, c, u):
    return [field.mul(c, a) for a in u]


def vec_is_zero(u) -> bool:
    return all(a == 0 for a in u)


def rref(rows: Sequence[Vector], field: Field) -> Tuple[List[Vector], List[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    builder = SpanBuilder(field, len(rows[0]) if rows else 0)
    for r in rows:
        builder.add(r)
    return builder.rows, builder.pivots


class Matrix:
    """Dense matrix with exact entries over a fixed field."""

    def __init__(self, field: Field, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.rows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged matrix")
        else:
            self.ncols = 0 if cols is None else cols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        rows = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls(field, rows, cols=n)

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [[field.zero] * ncols for _ in range(nrows)], cols=ncols)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Vector], nrows: int) -> "Matrix":
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(field, rows, cols=len(columns))

    def column(self, j: int) -> Vector:
        return [r[j] for r in self.rows]

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return out

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        f = self.field
        out = []
        for row in self.rows:
            new = [f.zero] * other.ncols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = other.rows[k]
                for j, b in enumerate(orow):
                    if b != 0:
                        new[j] = f.add(new[j], f.mul(a, b))
            out.append(new)
        return Matrix(f, out, cols=other.ncols)

    def add(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, [vec_add(f, r, s) for r, s in zip(self.rows, other.rows)], cols=self.ncols)

    def sub(self, other: "Matrix") -> "Matrix":
        f = self.field
        return Matrix(f, [vec_sub(f, r, s) for r, s in zip(self.rows, other.rows)], cols=self.ncols)

    def scale(self, c: Scalar) -> "Matrix":
        f = self.field
        return Matrix(f, [vec_scale(f, c, r) for r in self.rows], cols=self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], cols=self.nrows)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def rank(self) -> int:
        return len(rref(self.rows, self.field)[0])

    def rref(self) -> Tuple["Matrix", int]:
        rows, _ = rref(self.rows, self.field)
        rank = len(rows)
        padded = rows + [[self.field.zero] * self.ncols for _ in range(self.nrows - rank)]
        return Matrix(self.field, padded, cols=self.ncols), rank

    def kernel(self) -> "Subspace":
        """Null space {v : self @ v = 0} as a row-reduced subspace."""
        f = self.field
        rows, pivots = rref(self.rows, f)
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for j in free:
            v = [f.zero] * self.ncols
            v[j] = f.one
            for row, p in zip(rows, pivots):
                if row[j] != 0:
                    v[p] = f.neg(row[j])
            basis.append(v)
        return Subspace(f, self.ncols, basis)

    def solve(self, b: Vector) -> Optional[Vector]:
        """One exact solution of self @ x = b, or None when inconsistent."""
        f = self.field
        builder = SpanBuilder(f, self.ncols + 1)
        for row, rhs in zip(self.rows, b):
            builder.add(list(row) + [rhs])
        x = [f.zero] * self.ncols
        for row, p in zip(builder.rows, builder.pivots):
            if p == self.ncols:
                return None
            x[p] = row[self.ncols]
        return x

    def inverse(self) -> Optional["Matrix"]:
        """Exact inverse, or None when singular."""
        if self.nrows != self.ncols:
            return None
        f = self.field
        n = self.nrows
        builder = SpanBuilder(f, 2 * n)
        ident = Matrix.identity(f, n)
        for row, erow in zip(self.rows, ident.rows):
            builder.add(list(row) + list(erow))
        if builder.pivots[:n] != list(range(n)) or len(builder.rows) != n:
            return None
        return Matrix(f, [r[n:] for r in builder.rows], cols=n)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.name})"


class SpanBuilder:
    """Incremental span accumulator kept in reduced row-echelon form.

    `add` reports whether the vector enlarged the span.  With
    `track_expressions=True` each row also carries its expression over the
    retained (span-enlarging) input vectors, so members of the span can be
    written exactly in terms of the original generators.
    """

    def __init__(self, field: Field, ambient: int, track_expressions: bool = False):
        self.field = field
        self.ambient = ambient
        self.rows: List[Vector] = []
        self.pivots: List[int] = []
        self.track = track_expressions
        self.exprs: List[dict] = []  # generator index -> coefficient
        self.n_retained = 0

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Vector, expr: Optional[dict]):
        f = self.field
        v = list(v)
        for row, p, rexpr in zip(self.rows, self.pivots, self.exprs or [None] * len(self.rows)):
            c = v[p]
            if c == 0:
                continue
            for j in range(p, self.ambient):
                if row[j] != 0:
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
            if expr is not None and rexpr is not None:
                for g, val in rexpr.items():
                    expr[g] = f.sub(expr.get(g, f.zero), f.mul(c, val))
        return v, expr

    def add(self, v: Vector) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        f = self.field
        expr = {self.n_retained: f.one} if self.track else None
        v, expr = self._reduce(v, expr)
        pivot = next((j for j, a in enumerate(v) if a != 0), None)
        if pivot is None:
            return False
        inv = f.inv(v[pivot])
        if inv != f.one:
            v = [f.mul(inv, a) for a in v]
            if expr is not None:
                expr = {g: f.mul(inv, val) for g, val in expr.items()}
        # eliminate the new pivot from existing rows to keep RREF
        for idx, row in enumerate(self.rows):
            c = row[pivot]
            if c == 0:
                continue
            for j in range(pivot, self.ambient):
                if v[j] != 0:
                    row[j] = f.sub(row[j], f.mul(c, v[j]))
            if self.track:
                rexpr = self.exprs[idx]
                for g, val in expr.items():
                    rexpr[g] = f.sub(rexpr.get(g, f.zero), f.mul(c, val))
        pos = next((i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, pivot)
        if self.track:
            self.exprs.insert(pos, expr)
            self.n_retained += 1
        return True

    def contains(self, v: Vector) -> bool:
        v, _ = self._reduce(list(v), None)
        return vec_is_zero(v)

    def generator_coefficients(self, v: Vector) -> Optional[dict]:
        """Expression of v over the retained generators, or None if outside."""
        assert self.track, "builder was created without expression tracking"
        f = self.field
        v = list(v)
        combo: dict = {}
        for row, p, rexpr in zip(self.rows, self.pivots, self.exprs):
            c = v[p]
            if c == 0:
                continue
            for j in range(p, self.ambient):
                if row[j] != 0:
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
            for g, val in rexpr.items():
                combo[g] = f.add(combo.get(g, f.zero), f.mul(c, val))
        if not vec_is_zero(v):
            return None
        return {g: val for g, val in combo.items() if val != 0}

    def to_subspace(self) -> "Subspace":
        return Subspace(self.field, self.ambient, self.rows, _already_reduced=True)


class Subspace:
    """Subspace of K^n held as a reduced row-echelon basis."""

    def __init__(self, field: Field, ambient: int, vectors: Sequence[Vector], _already_reduced=False):
        self.field = field
        self.ambient = ambient
        if _already_reduced:
            self.basis = [list(v) for v in vectors]
            self.pivots = [next(j for j, a in enumerate(v) if a != 0) for v in self.basis]
        else:
            builder = SpanBuilder(field, ambient)
            for v in vectors:
                builder.add(v)
            self.basis = builder.rows
            self.pivots = builder.pivots

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, [])

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Matrix.identity(field, ambient).rows, _already_reduced=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_compat(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatch("subspaces live in different ambient spaces")

    def contains_vector(self, v: Vector) -> bool:
        if len(v) != self.ambient:
            raise AmbientMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        f = self.field
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c == 0:
                continue
            for j in range(p, self.ambient):
                if row[j] != 0:
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return vec_is_zero(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_compat(other)
        return all(self.contains_vector(v) for v in other.basis)

    def coefficients(self, v: Vector) -> Vector:
        """Expansion of v over the reduced basis; raises NotInSubspace."""
        f = self.field
        v = list(v)
        coeffs = []
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c == 0:
                continue
            for j in range(p, self.ambient):
                if row[j] != 0:
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        if not vec_is_zero(v):
            raise NotInSubspace("vector outside subspace")
        return coeffs

    def linear_combination(self, coeffs: Vector) -> Vector:
        f = self.field
        out = [f.zero] * self.ambient
        for c, row in zip(coeffs, self.basis):
            if c == 0:
                continue
            for j, a in enumerate(row):
                if a != 0:
                    out[j] = f.add(out[j], f.mul(c, a))
        return out

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compat(other)
        return Subspace(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [B|B] over [C|0]; zero-left rows give the meet."""
        self._check_compat(other)
        f = self.field
        n = self.ambient
        stacked = [list(v) + list(v) for v in self.basis]
        stacked += [list(v) + [f.zero] * n for v in other.basis]
        rows, pivots = rref(stacked, f)
        meet = [row[n:] for row, p in zip(rows, pivots) if p >= n]
        return Subspace(f, n, meet)

    def as_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, cols=self.ambient)

    def complement_functionals(self) -> List[Vector]:
        """Basis of {phi : phi(v) = 0 for all v in the subspace}."""
        if not self.basis:
            return Matrix.identity(self.field, self.ambient).rows
        return Matrix(self.field, self.basis, cols=self.ambient).kernel().basis

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient} over {self.field.name})"


def dot(field: Field, u: Vector, v: Vector) -> Scalar:
    acc = field.zero
    for a, b in zip(u, v):
        if a != 0 and b != 0:
            acc = field.add(acc, field.mul(a, b))
    return acc
