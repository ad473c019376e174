"""Steiner triple systems and block-design parameter checks.

Points are 0-based integers everywhere.  `sts_make` dispatches to the
Bose construction for v = 3 (mod 6) and the Skolem construction for
v = 1 (mod 6), both driven by explicit commutative quasigroups so the
output is deterministic per v.  `sts_boolean` builds the system on the
nonzero vectors of F_2^m whose triples are the XOR-closed ones; its
extension by an identity element is an elementary abelian group, which
is what makes it the safe choice for lifting to code additions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence


class NoSuchSystem(ValueError):
    """No Steiner triple system exists on this number of points."""


Triple = tuple[int, int, int]


@dataclass(frozen=True)
class STS:
    """A Steiner triple system on points 0..v-1."""

    v: int
    triples: tuple[Triple, ...]

    @property
    def b(self) -> int:
        return len(self.triples)

    @property
    def r(self) -> int:
        return (self.v - 1) // 2


def _normalize(v: int, triples: Iterable[Sequence[int]]) -> tuple[Triple, ...]:
    out = []
    for t in triples:
        if len(t) != 3 or len(set(t)) != 3:
            raise ValueError(f"not a 3-subset: {t}")
        if not all(0 <= x < v for x in t):
            raise ValueError(f"triple {t} out of range for v={v}")
        out.append(tuple(sorted(int(x) for x in t)))
    out.sort()
    return tuple(out)


def _bose(v: int) -> list[Triple]:
    # v = 6t + 3; idempotent commutative quasigroup on Z_{2t+1}:
    # x o y = (t+1)(x+y) mod (2t+1).
    t = (v - 3) // 6
    m = 2 * t + 1
    half = t + 1

    def pt(i: int, j: int) -> int:
        return i + m * j

    triples = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            k = (half * (i + j)) % m
            for lvl in range(3):
                triples.append((pt(i, lvl), pt(j, lvl), pt(k, (lvl + 1) % 3)))
    return triples


def _skolem(v: int) -> list[Triple]:
    # v = 6t + 1; half-idempotent commutative quasigroup on Z_{2t}:
    # x o y = s((x+y) mod 2t) with s(2i) = i and s(2i+1) = t + i.
    t = (v - 1) // 6
    m = 2 * t
    inf = 6 * t

    def half(x: int) -> int:
        return x // 2 if x % 2 == 0 else t + (x - 1) // 2

    def pt(i: int, j: int) -> int:
        return i + m * j

    triples = [(pt(i, 0), pt(i, 1), pt(i, 2)) for i in range(t)]
    for i in range(t):
        for lvl in range(3):
            triples.append((inf, pt(t + i, lvl), pt(i, (lvl + 1) % 3)))
    for i in range(m):
        for j in range(i + 1, m):
            k = half((i + j) % m)
            for lvl in range(3):
                triples.append((pt(i, lvl), pt(j, lvl), pt(k, (lvl + 1) % 3)))
    return triples


def sts_make(v: int) -> STS:
    """Deterministic STS(v) via Bose (v = 3 mod 6) or Skolem (v = 1 mod 6)."""
    if v < 3 or v % 6 not in (1, 3):
        raise NoSuchSystem(f"no STS on v={v}: need v = 1 or 3 (mod 6), v >= 3")
    if v == 3:
        return STS(3, ((0, 1, 2),))
    triples = _bose(v) if v % 6 == 3 else _skolem(v)
    return STS(v, _normalize(v, triples))


def sts_boolean(m: int) -> STS:
    """STS on the 2^m - 1 nonzero vectors of F_2^m with XOR-closed triples.

    Point i stands for the vector with integer encoding i + 1.
    """
    if m < 2:
        raise ValueError("need m >= 2")
    top = 1 << m
    triples = []
    for x in range(1, top):
        for y in range(x + 1, top):
            z = x ^ y
            if z > y:
                triples.append((x - 1, y - 1, z - 1))
    return STS(top - 1, _normalize(top - 1, triples))


@dataclass(frozen=True)
class STSCheck:
    ok: bool
    violation: Optional[tuple[tuple[int, int], int]] = None  # (pair, count)

    def to_dict(self) -> dict:
        return {"ok": self.ok,
                "violation": {"pair": list(self.violation[0]),
                              "count": self.violation[1]}
                if self.violation else None}


def verify_sts(v: int, triples: Iterable[Sequence[int]]) -> STSCheck:
    """Each pair of points must be covered by exactly one triple.

    Returns the lexicographically first violated pair with its coverage
    count (0 for uncovered, >= 2 for doubly covered).
    """
    if v < 3 or v % 6 not in (1, 3):
        return STSCheck(False, ((0, 1), 0))
    counts = {}
    for t in triples:
        for pair in combinations(sorted(t), 2):
            counts[pair] = counts.get(pair, 0) + 1
    for a in range(v):
        for b in range(a + 1, v):
            c = counts.get((a, b), 0)
            if c != 1:
                return STSCheck(False, ((a, b), c))
    return STSCheck(True, None)


@dataclass(frozen=True)
class DesignParams:
    """Computed parameters of a block family plus consistency flags."""

    v: int
    b: int
    k: Optional[int]                      # None when not uniform
    degrees: tuple[int, ...]
    r: Optional[int]                      # None when not regular
    pair_coverage: Optional[int]          # lambda when pairwise balanced
    block_intersection: Optional[int]     # lambda when constant over pairs
    uniform: bool
    regular: bool
    symmetric: bool                       # uniform, intersecting, b == v
    relations_ok: Optional[bool]          # r(k-1) = l(v-1) and bk = vr
    fisher_ok: Optional[bool]             # b <= v for intersecting families
    degenerate: bool                      # single block

    def to_dict(self) -> dict:
        return {"v": self.v, "b": self.b, "k": self.k,
                "degrees": list(self.degrees), "r": self.r,
                "pair_coverage": self.pair_coverage,
                "block_intersection": self.block_intersection,
                "uniform": self.uniform, "regular": self.regular,
                "symmetric": self.symmetric,
                "relations_ok": self.relations_ok,
                "fisher_ok": self.fisher_ok,
                "degenerate": self.degenerate}


def design_params(blocks: Sequence[Iterable[int]],
                  v: Optional[int] = None) -> DesignParams:
    """Parameters and sanity checks for a family of point sets.

    Flags rather than raises on non-uniform or unbalanced input.  The
    Fisher flag asserts b <= v whenever all pairwise block intersections
    share one size >= 1.
    """
    fam = [frozenset(int(x) for x in blk) for blk in blocks]
    if not fam:
        raise ValueError("family must be nonempty")
    if len(set(fam)) != len(fam):
        raise ValueError("blocks must be distinct")
    points = set().union(*fam)
    if v is None:
        v = max(points) + 1 if points else 0
    elif points and max(points) >= v:
        raise ValueError("block point exceeds v")

    b = len(fam)
    sizes = {len(blk) for blk in fam}
    uniform = len(sizes) == 1
    k = sizes.pop() if uniform else None

    degrees = [0] * v
    for blk in fam:
        for x in blk:
            degrees[x] += 1
    regular = len(set(degrees)) == 1 and v > 0
    r = degrees[0] if regular else None

    pair_counts = set()
    for x in range(v):
        for y in range(x + 1, v):
            pair_counts.add(sum(1 for blk in fam if x in blk and y in blk))
    pair_coverage = pair_counts.pop() if len(pair_counts) == 1 else None

    inter_sizes = {len(p & q) for p, q in combinations(fam, 2)}
    block_intersection = inter_sizes.pop() if len(inter_sizes) == 1 else None

    symmetric = bool(uniform and b == v and b >= 2
                     and block_intersection is not None
                     and block_intersection >= 1)

    relations_ok = None
    if uniform and regular and pair_coverage is not None and v >= 2:
        relations_ok = (r * (k - 1) == pair_coverage * (v - 1)
                        and b * k == v * r)

    fisher_ok = None
    if block_intersection is not None and block_intersection >= 1 and b >= 2:
        fisher_ok = b <= v

    return DesignParams(v=v, b=b, k=k, degrees=tuple(degrees), r=r,
                        pair_coverage=pair_coverage,
                        block_intersection=block_intersection,
                        uniform=uniform, regular=regular, symmetric=symmetric,
                        relations_ok=relations_ok, fisher_ok=fisher_ok,
                        degenerate=b == 1)


def is_projective_plane(blocks: Sequence[Iterable[int]],
                        v: Optional[int] = None) -> Optional[int]:
    """Recognize a projective plane; returns its order p or None.

    Requires v = p^2 + p + 1 points, (p+1)-uniform blocks, as many blocks
    as points, and every point pair on exactly one block.
    """
    params = design_params(blocks, v=v)
    if not params.uniform or params.k is None or params.k < 2:
        return None
    p = params.k - 1
    if params.v != p * p + p + 1 or params.b != params.v:
        return None
    if params.pair_coverage != 1:
        return None
    return p
