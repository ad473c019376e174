"""Named code constructions, intersecting families, and size bounds.

The two binary constructions build their addition tables directly from
the defining rules (powers of the F_8 generator for the dimension-3 code,
XOR on petal labels for the sunflower code).  For arbitrary prime powers,
`sts_lift` turns any d-intersecting uniform family of size 2^m - 1 into a
code by reading the addition off a Steiner triple system; only the
boolean system is guaranteed associative, so it is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .designs import sts_make
from .gfq import SUPPORTED_ORDERS, FieldSpec, UnsupportedOrder, field_make
from .lincode import LinearCode, code_make
from .subspace import (Subspace, enumerate_grassmannian, gaussian_binomial,
                       intersect, projective_space_size, span, zero_subspace)


class BadDimensions(ValueError):
    pass


class BadSize(ValueError):
    pass


class NotIntersecting(ValueError):
    pass


class TooFew(ValueError):
    pass


@dataclass(frozen=True)
class IntersectingFamily:
    """Uniform family of k-subspaces with all pairwise meets of dim lam.

    Members are kept in lexicographic order of their row encodings, which
    fixes the indexing used by `sts_lift`.
    """

    field: FieldSpec
    n: int
    k: int
    lam: int
    members: tuple[Subspace, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @classmethod
    def make(cls, field: FieldSpec, n: int, members: Sequence[Subspace],
             lam: Optional[int] = None) -> "IntersectingFamily":
        mem = sorted(set(members), key=lambda s: s.rows)
        if len(mem) != len(members):
            raise NotIntersecting("members must be distinct")
        if not mem:
            raise NotIntersecting("family must be nonempty")
        dims = {s.dim for s in mem}
        if len(dims) != 1:
            raise NotIntersecting(f"members not uniform: dims {sorted(dims)}")
        k = dims.pop()
        for s in mem:
            if s.field.q != field.q or s.n != n:
                raise NotIntersecting("member ambient space mismatch")
        lams = {intersect(x, y).dim
                for i, x in enumerate(mem) for y in mem[i + 1:]}
        if len(lams) > 1:
            raise NotIntersecting(
                f"pairwise intersection dims not constant: {sorted(lams)}")
        found = lams.pop() if lams else None
        if lam is None:
            lam = found if found is not None else 0
        elif found is not None and found != lam:
            raise NotIntersecting(
                f"pairwise intersection dim {found} != requested {lam}")
        if not 0 <= lam < k:
            raise NotIntersecting(f"need 0 <= lambda < k, got {lam}, {k}")
        return cls(field, n, k, lam, tuple(mem))


@dataclass(frozen=True)
class SunflowerFamily(IntersectingFamily):
    """Intersecting family whose pairwise meets all equal one center."""

    center: Subspace = None  # type: ignore[assignment]


def grassmannian_family(q: int, n: int, k: int) -> IntersectingFamily:
    """The full Grassmannian as a family (1-intersecting when k=2, n=3)."""
    f = field_make(q)
    return IntersectingFamily.make(f, n, enumerate_grassmannian(f, n, k))


def sunflower(field: FieldSpec, n: int, center: Subspace,
              k: int) -> SunflowerFamily:
    """All k-subspaces through `center`, which must have dimension k - 1.

    For petals exactly one dimension above the center the containment
    family is automatically a sunflower; thicker petals through a common
    center can meet outside it, so they are rejected.
    """
    t = center.dim
    if not (t < k <= n):
        raise BadDimensions(f"need dim(center) < k <= n, got {t}, {k}, {n}")
    if k != t + 1:
        raise BadDimensions(
            "petal dimension must exceed the center by exactly 1; "
            "larger petals through a common center are not a sunflower")
    members = [s for s in enumerate_grassmannian(field, n, k)
               if center.is_contained_in(s)]
    expected = gaussian_binomial(field.q, n - t, k - t)
    assert len(members) == expected
    fam = IntersectingFamily.make(field, n, members, lam=t)
    return SunflowerFamily(field, n, fam.k, fam.lam, fam.members,
                           center=center)


def least_subspace(field: FieldSpec, n: int, k: int) -> Subspace:
    """Lexicographically least k-subspace (pivots in the last k columns)."""
    rows = tuple(tuple(1 if c == n - k + r else 0 for c in range(n))
                 for r in range(k))
    return Subspace(field, n, rows)


def hyperplane_family(field: FieldSpec, n: int = 4,
                      hyperplane: Optional[Subspace] = None
                      ) -> IntersectingFamily:
    """All 2-subspaces inside a fixed 3-subspace of F_q^4; 1-intersecting
    of size q^2 + q + 1.  Defaults to the lexicographically least
    hyperplane."""
    if n != 4:
        raise BadDimensions("the hyperplane family lives in ambient n=4")
    t = hyperplane if hyperplane is not None else least_subspace(field, n, 3)
    if t.dim != 3 or t.n != n or t.field.q != field.q:
        raise BadDimensions("hyperplane must be a 3-subspace of F_q^4")
    members = [s for s in enumerate_grassmannian(field, n, 2)
               if s.is_contained_in(t)]
    assert len(members) == field.q ** 2 + field.q + 1
    return IntersectingFamily.make(field, n, members, lam=1)


def trim_family(family: IntersectingFamily,
                target_size: int) -> IntersectingFamily:
    """Keep the lexicographically least members; any subset of an
    intersecting family is still intersecting."""
    if target_size < 1:
        raise TooFew("target size must be at least 1")
    if target_size > family.size:
        raise TooFew(
            f"cannot trim {family.size} members to {target_size}")
    return IntersectingFamily.make(family.field, family.n,
                                   family.members[:target_size],
                                   lam=family.lam if target_size >= 2 else None)


def fano_code() -> LinearCode:
    """The size-8 equidistant code in P_2(3) built from F_8.

    Codeword i+1 is the span of {a^i, a^(i+1)} for the generator a of F_8
    (a^3 = a + 1), viewed as vectors of F_2^3; the table adds generators
    pointwise, which lands on another codeword because a^i + a^j is again
    a power of a.
    """
    f8 = field_make(8)
    f2 = field_make(2)
    powers = [1]
    for _ in range(6):
        powers.append(f8.mul(powers[-1], f8.alpha))
    vec = f8.coords
    cws: list[Subspace] = [zero_subspace(f2, 3)]
    for i in range(7):
        cws.append(span(f2, 3, [vec(powers[i]), vec(powers[(i + 1) % 7])]))
    table = [[0] * 8 for _ in range(8)]
    for i in range(8):
        table[i][0] = table[0][i] = i
    for i in range(7):
        for j in range(7):
            if i == j:
                continue
            s = f8.add(powers[i], powers[j])
            table[i + 1][j + 1] = powers.index(s) + 1
    return code_make(f2, 3, cws, table)


def sunflower_code_binary(n: int) -> LinearCode:
    """Size 2^(n-1) equidistant code in P_2(n) from the full sunflower of
    planes through <e_1>; addition is XOR on the petal labels."""
    if n < 3:
        raise BadDimensions("need ambient n >= 3")
    f2 = field_make(2)
    m = 1 << (n - 1)
    e1 = (1,) + (0,) * (n - 1)
    cws: list[Subspace] = [zero_subspace(f2, n)]
    for b in range(1, m):
        v = (0,) + tuple((b >> i) & 1 for i in range(n - 1))
        cws.append(span(f2, n, [e1, v]))
    table = tuple(tuple(i ^ j for j in range(m)) for i in range(m))
    return code_make(f2, n, cws, table)


def lattice_code(field: FieldSpec, n: int) -> LinearCode:
    """Code of all coordinate subspaces of a fixed basis, added by
    symmetric difference of the index sets.  Valid for any q, never
    equidistant for n >= 2; useful as a negative control."""
    if n < 1:
        raise BadDimensions("need ambient n >= 1")
    m = 1 << n
    cws = []
    for mask in range(m):
        rows = [tuple(1 if c == i else 0 for c in range(n))
                for i in range(n) if (mask >> i) & 1]
        cws.append(Subspace(field, n, tuple(rows)))
    table = tuple(tuple(i ^ j for j in range(m)) for i in range(m))
    return code_make(field, n, cws, table)


def sts_lift(family: IntersectingFamily, mode: str = "boolean") -> LinearCode:
    """Adjoin {0} to the family and read the addition off an STS.

    The family must be d-intersecting and uniform of dimension 2d with
    2^m - 1 members.  Identity, self-inversion, commutativity and isometry
    hold by construction for any STS; associativity is guaranteed only in
    boolean mode and must be checked by the verifier in bose_skolem mode.
    """
    if mode not in ("boolean", "bose_skolem"):
        raise ValueError(f"unknown mode {mode!r}")
    size = family.size
    m = size + 1
    if m & (m - 1) != 0:
        raise BadSize(f"family size {size} is not 2^m - 1")
    if family.k != 2 * family.lam:
        raise NotIntersecting(
            f"need intersection dim k/2, got k={family.k}, "
            f"lambda={family.lam}")
    cws = (zero_subspace(family.field, family.n),) + family.members
    if mode == "boolean":
        table = tuple(tuple(i ^ j for j in range(m)) for i in range(m))
    else:
        sts = sts_make(size)
        rows = [[0] * m for _ in range(m)]
        for i in range(m):
            rows[i][0] = rows[0][i] = i
        for (a, b, c) in sts.triples:
            for (x, y, z) in ((a, b, c), (a, c, b), (b, c, a)):
                rows[x + 1][y + 1] = z + 1
                rows[y + 1][x + 1] = z + 1
        table = tuple(tuple(r) for r in rows)
    return code_make(family.field, family.n, cws, table)


def extract_family(code: LinearCode) -> IntersectingFamily:
    """Nontrivial part of a code as a validated intersecting family."""
    return IntersectingFamily.make(code.field, code.n, code.codewords[1:])


def collapse_blocks(code: LinearCode) -> tuple[int, list[frozenset[int]]]:
    """Point-set blocks of the nontrivial codewords over the nonzero
    vectors of F_q^n.  Vector (c_0..c_{n-1}) maps to the point
    sum(c_i q^i) - 1, so points run over 0..q^n-2."""
    q = code.field.q
    n = code.n
    blocks = []
    for cw in code.codewords[1:]:
        pts = set()
        for v in cw.vectors():
            idx = 0
            for c in reversed(v):
                idx = idx * q + c
            if idx:
                pts.add(idx - 1)
        blocks.append(frozenset(pts))
    return q ** n - 1, blocks


def _floor_pow2(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def max_code_size_dim3(q: int) -> int:
    """Largest equidistant linear code size in P_q(3): the whole
    Grassmannian of planes is 1-intersecting, so 2^floor(log2(q^2+q+2))."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"q={q} unsupported")
    return _floor_pow2(q * q + q + 2)


def max_code_size_distance2(q: int, n: int) -> int:
    """Largest equidistant linear code size in P_q(n) at constant
    distance 2.  For n >= 4 the extremal 1-intersecting family has
    (q^(n-1)-1)/(q-1) members; at n = 3 the full Grassmannian of planes
    is larger and the two bounds coincide with `max_code_size_dim3`."""
    if q not in SUPPORTED_ORDERS:
        raise UnsupportedOrder(f"q={q} unsupported")
    if n < 3:
        raise BadDimensions("need n >= 3")
    if n == 3:
        return max_code_size_dim3(q)
    return _floor_pow2((q ** (n - 1) - 1) // (q - 1) + 1)


TABLE1_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17)
TABLE2_DIMENSIONS = (3, 4, 5, 6, 7, 8)


def size_table_by_field_order(qs: Optional[Sequence[int]] = None
                              ) -> list[tuple[int, int, int]]:
    """Rows (q, q^2+q+1, max code size in P_q(3))."""
    out = []
    for q in (qs if qs is not None else TABLE1_ORDERS):
        out.append((q, q * q + q + 1, max_code_size_dim3(q)))
    return out


def size_table_by_dimension(ns: Optional[Sequence[int]] = None
                            ) -> list[tuple[int, int, int]]:
    """Rows (n, max distance-2 code size in P_3(n), |P_3(n)|)."""
    out = []
    for n in (ns if ns is not None else TABLE2_DIMENSIONS):
        out.append((n, max_code_size_distance2(3, n),
                    projective_space_size(3, n)))
    return out


@dataclass(frozen=True)
class RatioReport:
    """How much of P_q(3) the largest equidistant linear code fills."""

    q: int
    code_size: int
    space_size: int
    ratio: Fraction
    within_bounds: bool     # 1/4 < ratio <= 1/2
    at_half: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "code_size": self.code_size,
                "space_size": self.space_size,
                "ratio": [self.ratio.numerator, self.ratio.denominator],
                "within_bounds": self.within_bounds, "at_half": self.at_half}


def ratio_report(q: int) -> RatioReport:
    e = max_code_size_dim3(q)
    space = projective_space_size(q, 3)
    assert space == 2 * (q * q + q + 2)
    ratio = Fraction(e, space)
    return RatioReport(q=q, code_size=e, space_size=space, ratio=ratio,
                       within_bounds=Fraction(1, 4) < ratio <= Fraction(1, 2),
                       at_half=ratio == Fraction(1, 2))


@dataclass(frozen=True)
class BoundEntry:
    d: int
    family_bound: Optional[int]   # largest d-intersecting family size
    family_exact: bool            # True when certified by exhausted search
    code_bound: Optional[int]     # 2^floor(log2(bound + 1))

    def to_dict(self) -> dict:
        return {"d": self.d, "family_bound": self.family_bound,
                "family_exact": self.family_exact,
                "code_bound": self.code_bound}


@dataclass(frozen=True)
class BoundReport:
    """Per-distance size bounds for equidistant linear codes in P_q(n).

    The constant-dimension code maximum at distance 2d coincides with the
    d-intersecting family maximum, so `family_bound` covers both.
    """

    q: int
    n: int
    entries: tuple[BoundEntry, ...]
    overall: Optional[int]
    overall_exact: bool

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n,
                "entries": [e.to_dict() for e in self.entries],
                "overall": self.overall, "overall_exact": self.overall_exact}


def assemble_bound_report(q: int, n: int,
                          family_maxima: Optional[dict[int, tuple[int, bool]]]
                          = None) -> BoundReport:
    """Combine closed forms (d = 1) with searched maxima (d > 1).

    family_maxima maps d to (max size, exhausted flag), typically from
    `search.max_intersecting_family`.
    """
    family_maxima = family_maxima or {}
    entries = []
    for d in range(1, n // 2 + 1):
        if d in family_maxima:
            size, exact = family_maxima[d]
        elif d == 1:
            size = (q * q + q + 1) if n == 3 \
                else (q ** (n - 1) - 1) // (q - 1)
            exact = True
        else:
            size, exact = None, False
        code_bound = _floor_pow2(size + 1) if size is not None else None
        entries.append(BoundEntry(d=d, family_bound=size, family_exact=exact,
                                  code_bound=code_bound))
    known = [e.code_bound for e in entries if e.code_bound is not None]
    overall = max(known) if known else None
    overall_exact = bool(entries) and all(e.family_exact for e in entries)
    return BoundReport(q=q, n=n, entries=tuple(entries), overall=overall,
                       overall_exact=overall_exact)
