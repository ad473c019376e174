"""Linear subspace codes: containers, axiom verification, metrics.

A code is a list of distinct subspaces with the zero subspace at index 0
plus an optional M x M index table for the addition.  The verifier checks
the four defining axioms exhaustively: abelian group (closure,
commutativity, associativity over all M^3 triples), identity {0},
self-inversion, and isometry of the addition with respect to the subspace
distance.  Counterexamples are reported in lexicographic order so runs
are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

from .gfq import FieldSpec
from .subspace import Subspace, subspace_distance, subspace_sum


class DuplicateCodeword(ValueError):
    pass


class MissingZero(ValueError):
    pass


class MalformedTable(ValueError):
    pass


class NoTable(ValueError):
    pass


class TooSmall(ValueError):
    pass


class NotVerifiedLinear(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """Codeword list plus optional addition table.  Immutable.

    Use `code_make` to construct with structural validation; direct
    instantiation skips all checks (needed to feed the verifier corrupted
    tables on purpose).
    """

    field: FieldSpec
    n: int
    codewords: tuple[Subspace, ...]
    table: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def size(self) -> int:
        return len(self.codewords)

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """Pairwise subspace distances, M x M, read-only."""
        m = self.size
        d = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for j in range(i + 1, m):
                d[i, j] = d[j, i] = subspace_distance(self.codewords[i],
                                                      self.codewords[j])
        d.flags.writeable = False
        return d

    @cached_property
    def intersection_dim_matrix(self) -> np.ndarray:
        """dim(X_i ∩ X_j) for all pairs, derived from the distance matrix."""
        dims = np.array([c.dim for c in self.codewords], dtype=np.int64)
        d = self.distance_matrix
        inter = (dims[:, None] + dims[None, :] - d) // 2
        inter.flags.writeable = False
        return inter


def code_make(field: FieldSpec, n: int, codewords: Sequence[Subspace],
              table: Optional[Sequence[Sequence[int]]] = None) -> LinearCode:
    """Checked constructor: distinct codewords, {0} at index 0, and a
    structurally sound table (square, symmetric, identity row, zero
    diagonal).  The group and isometry axioms are left to `verify_linear`.
    """
    cws = tuple(codewords)
    if not cws or cws[0].dim != 0:
        raise MissingZero("codeword 0 must be the zero subspace")
    for cw in cws:
        if cw.field.q != field.q or cw.n != n:
            raise MalformedTable(
                f"codeword ambient ({cw.field.q}, {cw.n}) != ({field.q}, {n})")
    if len(set(cws)) != len(cws):
        raise DuplicateCodeword("codewords must be pairwise distinct")
    m = len(cws)
    tbl = None
    if table is not None:
        tbl = tuple(tuple(int(v) for v in row) for row in table)
        if len(tbl) != m or any(len(row) != m for row in tbl):
            raise MalformedTable(f"table must be {m} x {m}")
        for i in range(m):
            for j in range(m):
                v = tbl[i][j]
                if not 0 <= v < m:
                    raise MalformedTable(f"table[{i}][{j}] = {v} out of range")
                if tbl[j][i] != v:
                    raise MalformedTable(
                        f"table[{i}][{j}] != table[{j}][{i}]")
            if tbl[i][0] != i:
                raise MalformedTable(f"table[{i}][0] != {i}")
            if tbl[i][i] != 0:
                raise MalformedTable(f"table[{i}][{i}] != 0")
    return LinearCode(field, n, cws, tbl)


def with_table_entry(code: LinearCode, i: int, j: int, value: int) -> LinearCode:
    """Copy of the code with one table entry overwritten, no checks.

    Exists so the verifier can be exercised against corrupted tables.
    """
    if code.table is None:
        raise NoTable("code has no table")
    rows = [list(r) for r in code.table]
    rows[i][j] = value
    return LinearCode(code.field, code.n, code.codewords,
                      tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    counterexample: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "counterexample": list(self.counterexample)
                if self.counterexample is not None else None}


@dataclass(frozen=True)
class VerificationReport:
    """Per-axiom pass/fail with the first lexicographic counterexample."""

    closure: CheckResult
    commutativity: CheckResult
    associativity: CheckResult
    identity: CheckResult
    self_inverse: CheckResult
    isometry: CheckResult

    @property
    def passed(self) -> bool:
        return all(c.ok for c in (self.closure, self.commutativity,
                                  self.associativity, self.identity,
                                  self.self_inverse, self.isometry))

    def failed_axioms(self) -> list[str]:
        names = ("closure", "commutativity", "associativity", "identity",
                 "self_inverse", "isometry")
        return [n for n in names if not getattr(self, n).ok]

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "axioms": {n: getattr(self, n).to_dict()
                           for n in ("closure", "commutativity",
                                     "associativity", "identity",
                                     "self_inverse", "isometry")}}


def verify_linear(code: LinearCode) -> VerificationReport:
    """Exhaustive check of the four linearity axioms.

    Associativity and isometry run over all M^3 triples, vectorized one
    outer index at a time so the memory stays at M^2 and the first
    counterexample comes out in lexicographic triple order.
    """
    if code.table is None:
        raise NoTable("verification requires an addition table")
    t = np.asarray(code.table, dtype=np.int64)
    m = code.size

    bad = np.argwhere((t < 0) | (t >= m))
    closure = CheckResult(bad.size == 0,
                          tuple(bad[0]) if bad.size else None)

    mism = np.argwhere(t != t.T)
    commutativity = CheckResult(mism.size == 0,
                                tuple(mism[0]) if mism.size else None)

    ident_ok = code.codewords[0].dim == 0
    ident_ctr = None
    if not ident_ok:
        ident_ctr = (0,)
    else:
        rng = np.arange(m)
        col = np.argwhere((t[:, 0] != rng) | (t[0, :] != rng))
        if col.size:
            ident_ok, ident_ctr = False, (int(col[0][0]),)
    identity = CheckResult(ident_ok, ident_ctr)

    diag = np.argwhere(np.diagonal(t) != 0)
    self_inverse = CheckResult(diag.size == 0,
                               (int(diag[0][0]),) if diag.size else None)

    associativity = CheckResult(False, None)
    isometry = CheckResult(False, None)
    if closure.ok:
        associativity = CheckResult(True, None)
        for i in range(m):
            lhs = t[t[i]]          # (j, k) -> (x_i + x_j) + x_k
            rhs = t[i][t]          # (j, k) -> x_i + (x_j + x_k)
            if not np.array_equal(lhs, rhs):
                j, k = np.argwhere(lhs != rhs)[0]
                associativity = CheckResult(False, (i, int(j), int(k)))
                break

        dist = code.distance_matrix
        isometry = CheckResult(True, None)
        for y1 in range(m):
            lhs = dist[t[y1][None, :], t]   # (y2, x) -> d(y1+x, y2+x)
            rhs = dist[y1][:, None]         # (y2, x) -> d(y1, y2)
            diff = lhs != rhs
            if diff.any():
                y2, x = np.argwhere(diff)[0]
                isometry = CheckResult(False, (y1, int(y2), int(x)))
                break

    return VerificationReport(closure, commutativity, associativity,
                              identity, self_inverse, isometry)


@dataclass(frozen=True)
class CodeMetrics:
    size: int
    d: int
    l: int
    rate: Union[Fraction, float]
    rate_exact: bool
    delta: Fraction
    constant_distance: Optional[int]
    min_codeword_dim: int

    def to_dict(self) -> dict:
        return {"size": self.size, "d": self.d, "l": self.l,
                "rate": [self.rate.numerator, self.rate.denominator]
                if self.rate_exact else float(self.rate),
                "rate_exact": self.rate_exact,
                "delta": [self.delta.numerator, self.delta.denominator],
                "constant_distance": self.constant_distance,
                "min_codeword_dim": self.min_codeword_dim}


def metrics(code: LinearCode) -> CodeMetrics:
    """Distance/rate metrics.  d is the minimum pairwise distance; for a
    verified linear code it coincides with the least nontrivial codeword
    dimension (asserted by the identity suite, not here).
    """
    m = code.size
    if m < 2:
        raise TooSmall("metrics need at least two codewords")
    dist = code.distance_matrix
    iu = np.triu_indices(m, k=1)
    offdiag = dist[iu]
    d = int(offdiag.min())
    dims = [c.dim for c in code.codewords[1:]]
    l = max(dims)
    q = code.field.q
    # log_q(M) is exact only when M is a power of q.
    k = round(math.log(m, q))
    if q ** k == m:
        rate: Union[Fraction, float] = Fraction(k, code.n * l)
        exact = True
    else:
        rate = math.log(m, q) / (code.n * l)
        exact = False
    constant = int(offdiag[0]) if np.all(offdiag == offdiag[0]) else None
    return CodeMetrics(size=m, d=d, l=l, rate=rate, rate_exact=exact,
                       delta=Fraction(d, 2 * l), constant_distance=constant,
                       min_codeword_dim=min(dims))


def boxplus(code: LinearCode, i: int, j: int) -> int:
    """Table lookup for the addition of codewords i and j."""
    if code.table is None:
        raise NoTable("code has no addition table")
    m = code.size
    if not (0 <= i < m and 0 <= j < m):
        raise IndexOutOfRange(f"indices ({i}, {j}) out of range for M={m}")
    return code.table[i][j]


IDENTITY_CHECKS = (
    "sum_dim_is_distance",        # dim(X+Y under the table) = d_S(X, Y)
    "third_point_exchange",       # Z = X+Y implies Y = X+Z
    "disjoint_sum_is_span",       # X ∩ Y = {0} implies table sum = X + Y
    "min_dim_is_min_distance",    # least nontrivial dim = min distance
    "dim_split_of_operand",       # dim X = dim(X∩Y) + dim(X∩(X+Y))
    "dim_split_of_sum",           # dim(X+Y) = dim(X∩(X+Y)) + dim(Y∩(X+Y))
    "dim_difference_bound",       # dim(X+Y) >= dim X - dim Y, = iff Y ⊆ X
    "nested_iff_sum_nested",      # Y ⊂ X iff (X+Y) ⊂ X
    "nested_iff_meet_trivial",    # Y ⊂ X iff Y ∩ (X+Y) = {0}
)


@dataclass(frozen=True)
class IdentityReport:
    """Pass/fail per structural identity of verified linear codes."""

    checks: dict[str, CheckResult] = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def first_failure(self) -> Optional[tuple[str, CheckResult]]:
        for name in IDENTITY_CHECKS:
            c = self.checks[name]
            if not c.ok:
                return name, c
        return None

    def to_dict(self) -> dict:
        return {"passed": self.passed,
                "checks": {k: v.to_dict() for k, v in self.checks.items()}}


def check_linearity_identities(code: LinearCode,
                               require_verified: bool = True) -> IdentityReport:
    """Exhaustively test the geometric identities every linear code obeys.

    With require_verified the code must first pass `verify_linear`; pass
    False to probe which identity a corrupted table breaks.
    """
    if code.table is None:
        raise NoTable("identity checks require an addition table")
    if require_verified and not verify_linear(code).passed:
        raise NotVerifiedLinear("code fails the linearity axioms")

    cws = code.codewords
    t = code.table
    m = code.size
    dist = code.distance_matrix
    fails: dict[str, tuple] = {}

    def record(name: str, ctr: tuple) -> None:
        if name not in fails:
            fails[name] = ctr

    inter_dims = code.intersection_dim_matrix
    for i in range(m):
        x = cws[i]
        for j in range(m):
            y = cws[j]
            s = t[i][j]
            xy = cws[s]
            if xy.dim != dist[i, j]:
                record("sum_dim_is_distance", (i, j))
            if t[i][s] != j:
                record("third_point_exchange", (i, j))
            if inter_dims[i, j] == 0:
                if xy != subspace_sum(x, y) or xy.dim != x.dim + y.dim:
                    record("disjoint_sum_is_span", (i, j))
            dim_meet_x_xy = inter_dims[i, s]
            dim_meet_y_xy = inter_dims[j, s]
            if x.dim != inter_dims[i, j] + dim_meet_x_xy:
                record("dim_split_of_operand", (i, j))
            if xy.dim != dim_meet_x_xy + dim_meet_y_xy:
                record("dim_split_of_sum", (i, j))
            y_in_x = i != j and inter_dims[i, j] == y.dim
            if xy.dim < x.dim - y.dim or \
                    ((xy.dim == x.dim - y.dim) != (inter_dims[i, j] == y.dim)):
                record("dim_difference_bound", (i, j))
            if i != j and i != 0 and j != 0:
                sum_in_x = s != i and inter_dims[i, s] == xy.dim
                if y_in_x != sum_in_x:
                    record("nested_iff_sum_nested", (i, j))
                if y_in_x != (dim_meet_y_xy == 0):
                    record("nested_iff_meet_trivial", (i, j))

    if m >= 2:
        iu = np.triu_indices(m, k=1)
        min_pair = int(dist[iu].min())
        min_dim = min(c.dim for c in cws[1:])
        if min_pair != min_dim:
            record("min_dim_is_min_distance", (min_dim, min_pair))

    checks = {name: CheckResult(name not in fails, fails.get(name))
              for name in IDENTITY_CHECKS}
    return IdentityReport(checks=checks)


@dataclass(frozen=True)
class StructureReport:
    """Equidistance analysis: the three equivalent characterizations."""

    size: int
    equidistant: bool
    constant_distance: Optional[int]
    intersection_dim: Optional[int]           # d when constant distance = 2d
    uniform_dim: Optional[int]
    cond_constant_distance: bool
    cond_uniform_dim: bool
    cond_constant_intersection: bool
    conditions_equivalent: bool
    even_distance_ok: Optional[bool]          # None when vacuous (M < 3)
    size_power_of_two: bool
    delta: Fraction
    delta_is_half: bool
    consistent: bool

    def to_dict(self) -> dict:
        return {"size": self.size, "equidistant": self.equidistant,
                "constant_distance": self.constant_distance,
                "intersection_dim": self.intersection_dim,
                "uniform_dim": self.uniform_dim,
                "cond_constant_distance": self.cond_constant_distance,
                "cond_uniform_dim": self.cond_uniform_dim,
                "cond_constant_intersection": self.cond_constant_intersection,
                "conditions_equivalent": self.conditions_equivalent,
                "even_distance_ok": self.even_distance_ok,
                "size_power_of_two": self.size_power_of_two,
                "delta": [self.delta.numerator, self.delta.denominator],
                "delta_is_half": self.delta_is_half,
                "consistent": self.consistent}


def structure_analysis(code: LinearCode,
                       require_verified: bool = True) -> StructureReport:
    """Determine equidistance and check the equivalent characterizations:
    constant distance 2d, all nontrivial codewords of dimension 2d, and
    pairwise intersections of dimension d.
    """
    if require_verified:
        if code.table is None:
            raise NoTable("structure analysis requires an addition table")
        if not verify_linear(code).passed:
            raise NotVerifiedLinear("code fails the linearity axioms")
    m = code.size
    if m < 2:
        raise TooSmall("structure analysis needs at least two codewords")

    dist = code.distance_matrix
    iu = np.triu_indices(m, k=1)
    offdiag = dist[iu]
    cond_a = bool(np.all(offdiag == offdiag[0]))
    constant = int(offdiag[0]) if cond_a else None

    dims = [c.dim for c in code.codewords[1:]]
    cond_b = len(set(dims)) == 1
    uniform = dims[0] if cond_b else None

    if m >= 3:
        inter = code.intersection_dim_matrix[1:, 1:]
        ius = np.triu_indices(m - 1, k=1)
        vals = inter[ius]
        cond_c = bool(np.all(vals == vals[0]))
        inter_dim = int(vals[0]) if cond_c else None
    else:
        cond_c = True
        inter_dim = None

    # The three conditions must agree as booleans and in their parameters.
    equivalent = cond_a == cond_b == cond_c
    if equivalent and cond_a:
        if uniform != constant:
            equivalent = False
        if m >= 3 and inter_dim is not None and constant is not None \
                and 2 * inter_dim != constant:
            equivalent = False

    even_ok: Optional[bool] = None
    if cond_a and m >= 3:
        even_ok = constant % 2 == 0
    if cond_a and constant is not None and constant % 2 == 0 \
            and inter_dim is None:
        inter_dim = constant // 2

    mets = metrics(code)
    delta_is_half = mets.delta == Fraction(1, 2)
    consistent = equivalent and (delta_is_half == cond_a) and \
        (even_ok is not False)
    return StructureReport(
        size=m, equidistant=cond_a, constant_distance=constant,
        intersection_dim=inter_dim, uniform_dim=uniform,
        cond_constant_distance=cond_a, cond_uniform_dim=cond_b,
        cond_constant_intersection=cond_c, conditions_equivalent=equivalent,
        even_distance_ok=even_ok,
        size_power_of_two=m & (m - 1) == 0,
        delta=mets.delta, delta_is_half=delta_is_half,
        consistent=consistent)
