"""Canonical subspaces of F_q^n: span, sum, intersection, distance.

A subspace is stored as the tuple of rows of its reduced row echelon
basis (pivots strictly increasing, pivot entries 1, zeros above and below
pivots).  The zero subspace is the empty row tuple.  Canonical form makes
structural equality coincide with subspace equality, so subspaces can be
hashed, sorted and deduplicated directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .gfq import FieldSpec

ENUMERATION_GUARD = 10 ** 7


class DimensionMismatch(ValueError):
    """Input vectors do not all have the ambient length."""


class AmbientMismatch(ValueError):
    """Operands live in different ambient spaces."""


class TooLarge(ValueError):
    """Requested enumeration exceeds the in-memory guard."""


def _rref(field: FieldSpec, rows: Iterable[Sequence[int]],
          ncols: int) -> list[tuple[int, ...]]:
    """Reduced row echelon form; returns the nonzero rows."""
    mat = [list(r) for r in rows]
    mul, sub_, inv = field.mul, field.sub, field.inv
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        if mat[r][c] != 1:
            f = inv(mat[r][c])
            mat[r] = [mul(f, x) for x in mat[r]]
        row_r = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [sub_(x, mul(f, y)) for x, y in zip(mat[i], row_r)]
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n in canonical reduced row echelon form."""

    field: FieldSpec
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, v in enumerate(row) if v != 0)
                     for row in self.rows)

    def contains(self, vector: Sequence[int]) -> bool:
        """Membership test by reduction against the canonical basis."""
        if len(vector) != self.n:
            raise DimensionMismatch(
                f"vector length {len(vector)} != ambient {self.n}")
        f = self.field
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return all(x == 0 for x in v)

    def is_contained_in(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(row) for row in self.rows)

    def vectors(self) -> list[tuple[int, ...]]:
        """All q^dim member vectors (small subspaces only)."""
        f = self.field
        out = [(0,) * self.n]
        for row in self.rows:
            scaled = [[f.mul(c, x) for x in row] for c in range(f.q)]
            out = [tuple(f.add(a, b) for a, b in zip(v, s))
                   for v in out for s in scaled]
        return out

    def __repr__(self) -> str:
        return f"Subspace(q={self.field.q}, n={self.n}, rows={self.rows})"


def _check_vectors(field: FieldSpec, n: int,
                   vectors: Iterable[Sequence[int]]) -> list[Sequence[int]]:
    vecs = list(vectors)
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatch(f"vector length {len(v)} != ambient {n}")
        for x in v:
            if not 0 <= x < field.q:
                raise ValueError(f"coordinate {x} not a field element index")
    return vecs


def _check_ambient(x: Subspace, y: Subspace) -> None:
    if x.field.q != y.field.q or x.n != y.n:
        raise AmbientMismatch(
            f"({x.field.q}, n={x.n}) vs ({y.field.q}, n={y.n})")


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    rows = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    return Subspace(field, n, rows)


def span(field: FieldSpec, n: int,
         vectors: Iterable[Sequence[int]]) -> Subspace:
    """Canonical span of a set of vectors; span of nothing is {0}."""
    vecs = _check_vectors(field, n, vectors)
    return Subspace(field, n, tuple(_rref(field, vecs, n)))


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    """Smallest subspace containing both operands."""
    _check_ambient(x, y)
    return Subspace(x.field, x.n, tuple(_rref(x.field, x.rows + y.rows, x.n)))


def intersect(x: Subspace, y: Subspace) -> Subspace:
    """Intersection via the Zassenhaus stacked-matrix elimination."""
    _check_ambient(x, y)
    f, n = x.field, x.n
    if x.dim == 0 or y.dim == 0:
        return zero_subspace(f, n)
    stacked = [list(r) + list(r) for r in x.rows] + \
              [list(r) + [0] * n for r in y.rows]
    reduced = _rref(f, stacked, 2 * n)
    inter = [row[n:] for row in reduced if not any(row[:n])]
    return span(f, n, inter)


def subspace_distance(x: Subspace, y: Subspace) -> int:
    """dim(X+Y) - dim(X ∩ Y), computed from one rank elimination."""
    _check_ambient(x, y)
    dsum = len(_rref(x.field, x.rows + y.rows, x.n))
    return 2 * dsum - x.dim - y.dim


def orthogonal_complement(x: Subspace) -> Subspace:
    """Kernel of the basis matrix under the standard inner product.

    In characteristic p the complement may intersect x nontrivially; only
    dim(x) + dim(complement) = n is guaranteed.
    """
    f, n = x.field, x.n
    if x.dim == 0:
        return full_space(f, n)
    pivots = x.pivots
    pivot_set = set(pivots)
    basis = []
    for fc in range(n):
        if fc in pivot_set:
            continue
        v = [0] * n
        v[fc] = 1
        for r_idx, pc in enumerate(pivots):
            v[pc] = f.neg(x.rows[r_idx][fc])
        basis.append(v)
    return span(f, n, basis)


def gaussian_binomial(q: int, n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_q^n, exact integer."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def projective_space_size(q: int, n: int) -> int:
    """Total number of subspaces of F_q^n across all dimensions."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(gaussian_binomial(q, n, k) for k in range(n + 1))


def enumerate_grassmannian(field: FieldSpec, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces, sorted by their flattened row encoding.

    Generates one canonical matrix per (pivot columns, free entries)
    choice, so every subspace appears exactly once.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    count = gaussian_binomial(field.q, n, k)
    if count > ENUMERATION_GUARD:
        raise TooLarge(f"|G_{field.q}({n},{k})| = {count} exceeds guard "
                       f"{ENUMERATION_GUARD}")
    q = field.q
    subs = []
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(r, c) for r in range(k)
                for c in range(pivots[r] + 1, n) if c not in pivot_set]
        base = [[0] * n for _ in range(k)]
        for r, pc in enumerate(pivots):
            base[r][pc] = 1
        for vals in product(range(q), repeat=len(free)):
            rows = [row[:] for row in base]
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            subs.append(Subspace(field, n, tuple(tuple(r) for r in rows)))
    subs.sort(key=lambda s: s.rows)
    return subs


def enumerate_projective_space(field: FieldSpec, n: int) -> list[Subspace]:
    """All subspaces of F_q^n, by dimension then row encoding."""
    out: list[Subspace] = []
    for k in range(n + 1):
        out.extend(enumerate_grassmannian(field, n, k))
    return out
