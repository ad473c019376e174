"""Exhaustive desk-scale searches: extremal families, counts, identities.

The extremal search reduces "largest d-intersecting family" to maximum
clique on the compatibility graph of a Grassmannian (vertices are the
k-subspaces in lexicographic order, edges join pairs meeting in dimension
exactly lambda).  Branch and bound with greedy coloring proves maxima;
a second census pass enumerates every maximum family.  Budgets are node
counts, never wall time, so results reproduce across machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .construct import IntersectingFamily, ratio_report, RatioReport
from .designs import is_projective_plane
from .gfq import field_make
from .lincode import LinearCode, code_make, verify_linear
from .subspace import (Subspace, enumerate_grassmannian, gaussian_binomial,
                       intersect, orthogonal_complement,
                       projective_space_size, subspace_distance,
                       zero_subspace)


class _BudgetHit(Exception):
    pass


class _BoundReached(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    q: int
    n: int
    k: int
    lam: int
    max_size: int
    exhausted: bool
    nodes_explored: int
    census_complete: bool
    witness_count: Optional[int]
    witnesses: tuple[tuple[Subspace, ...], ...]

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "k": self.k, "lambda": self.lam,
                "max_size": self.max_size, "exhausted": self.exhausted,
                "nodes_explored": self.nodes_explored,
                "census_complete": self.census_complete,
                "witness_count": self.witness_count,
                "witnesses": [[[list(r) for r in s.rows] for s in fam]
                              for fam in self.witnesses]}


def _projective_points(q: int, dim: int) -> int:
    return (q ** dim - 1) // (q - 1)


def _counting_bound(q: int, n: int, k: int, lam: int) -> Optional[int]:
    """Upper bound on a lam-intersecting family from double counting.

    Blocks are the projective point sets of the subspaces; any two share
    exactly w points.  Disjoint blocks pack, intersecting blocks obey the
    convexity inequality f(f-1)w >= (fK)^2/V - fK.
    """
    v = _projective_points(q, n)
    kk = _projective_points(q, k)
    w = _projective_points(q, lam)
    if lam == 0:
        return v // kk
    bound = v  # family size never exceeds the point count
    if kk * kk > v * w:
        bound = min(bound, (v * (kk - w)) // (kk * kk - v * w))
    return bound


def _greedy_color(p: int, neigh: list[int]) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set; nondecreasing color order."""
    out = []
    rest = p
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            out.append((v, color))
            bit = 1 << v
            avail &= ~(neigh[v] | bit)
            rest &= ~bit
    return out


class _CliqueSearch:
    """Deterministic max-clique plus maximum-clique census on bitmasks."""

    def __init__(self, neigh: list[int], budget: Optional[int],
                 upper_bound: Optional[int]):
        self.neigh = neigh
        self.nv = len(neigh)
        self.budget = budget
        self.upper_bound = upper_bound
        self.nodes = 0
        self.best_size = 0
        self.best_clique: list[int] = []
        self.witnesses: list[tuple[int, ...]] = []
        self.witness_count = 0
        self.witness_cap = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetHit

    def find_max(self) -> None:
        full = (1 << self.nv) - 1
        try:
            self._expand([], full)
        except _BoundReached:
            pass

    def _expand(self, r: list[int], p: int) -> None:
        self._tick()
        if p == 0:
            if len(r) > self.best_size:
                self.best_size = len(r)
                self.best_clique = r[:]
                if self.upper_bound is not None \
                        and self.best_size >= self.upper_bound:
                    raise _BoundReached
            return
        colored = _greedy_color(p, self.neigh)
        for idx in range(len(colored) - 1, -1, -1):
            v, c = colored[idx]
            if len(r) + c <= self.best_size:
                return
            r.append(v)
            self._expand(r, p & self.neigh[v])
            r.pop()
            p &= ~(1 << v)

    def census(self, size: int, cap: int) -> None:
        self.witness_cap = cap
        full = (1 << self.nv) - 1
        self._census([], full, size)

    def _census(self, r: list[int], p: int, size: int) -> None:
        self._tick()
        if len(r) == size:
            self.witness_count += 1
            if len(self.witnesses) < self.witness_cap:
                self.witnesses.append(tuple(r))
            return
        if p == 0:
            return
        colored = _greedy_color(p, self.neigh)
        for idx in range(len(colored) - 1, -1, -1):
            v, c = colored[idx]
            if len(r) + c < size:
                return
            r.append(v)
            self._census(r, p & self.neigh[v], size)
            r.pop()
            p &= ~(1 << v)


ORDERS = ("lex", "reverse", "degree")


def max_intersecting_family(q: int, n: int, k: int, lam: int,
                            budget: Optional[int] = None,
                            order: str = "lex",
                            census: bool = True,
                            witness_cap: int = 10000) -> SearchResult:
    """Exact maximum lam-intersecting family of k-subspaces in F_q^n.

    When the search exhausts, `max_size` is proven and (with census) the
    witness list holds every maximum family, lexicographically sorted.
    On budget exhaustion the best family found so far is returned with
    exhausted=False.  `order` permutes the branching sequence only; any
    exhausted run returns identical results.
    """
    if not 0 <= lam < k <= n:
        raise ValueError(f"need 0 <= lambda < k <= n, got {lam}, {k}, {n}")
    if order not in ORDERS:
        raise ValueError(f"order must be one of {ORDERS}")
    fld = field_make(q)
    subs = enumerate_grassmannian(fld, n, k)
    nv = len(subs)
    target_dist = 2 * (k - lam)

    if order == "lex":
        perm = list(range(nv))
    elif order == "reverse":
        perm = list(range(nv - 1, -1, -1))
    else:
        deg = [0] * nv
        pairs = []
        for i in range(nv):
            for j in range(i + 1, nv):
                if subspace_distance(subs[i], subs[j]) == target_dist:
                    deg[i] += 1
                    deg[j] += 1
                    pairs.append((i, j))
        perm = sorted(range(nv), key=lambda i: (-deg[i], i))

    pos = [0] * nv
    for p_idx, orig in enumerate(perm):
        pos[orig] = p_idx
    neigh = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if subspace_distance(subs[i], subs[j]) == target_dist:
                a, b = pos[i], pos[j]
                neigh[a] |= 1 << b
                neigh[b] |= 1 << a

    ub = _counting_bound(q, n, k, lam)
    if ub is not None:
        ub = min(ub, nv)
    engine = _CliqueSearch(neigh, budget, ub)
    exhausted = True
    try:
        engine.find_max()
    except _BudgetHit:
        exhausted = False

    census_complete = False
    witness_sets: list[tuple[int, ...]] = []
    witness_count: Optional[int] = None
    if exhausted and census and engine.best_size >= 1:
        try:
            engine.census(engine.best_size, witness_cap)
            census_complete = True
        except _BudgetHit:
            pass
        witness_count = engine.witness_count
        witness_sets = engine.witnesses
    elif engine.best_clique:
        witness_sets = [tuple(engine.best_clique)]

    families = []
    for ws in witness_sets:
        members = sorted((subs[perm[v]] for v in ws), key=lambda s: s.rows)
        fam = IntersectingFamily.make(fld, n, members, lam=lam) \
            if len(members) >= 2 else \
            IntersectingFamily.make(fld, n, members)
        families.append(tuple(fam.members))
    families.sort(key=lambda fam: [s.rows for s in fam])

    return SearchResult(q=q, n=n, k=k, lam=lam, max_size=engine.best_size,
                        exhausted=exhausted,
                        nodes_explored=engine.nodes,
                        census_complete=census_complete,
                        witness_count=witness_count,
                        witnesses=tuple(families))


def classify_extremal_family(members: Sequence[Subspace]) -> str:
    """Label a maximum intersecting family by its extremal shape.

    "sunflower": all members share a 1-dim center and every k-subspace
    through it appears.  "hyperplane": ambient n = 2k and the members are
    exactly the k-subspaces of one hyperplane.
    """
    mem = list(members)
    if not mem:
        return "other"
    q = mem[0].field.q
    n = mem[0].n
    k = mem[0].dim
    common = mem[0]
    join = mem[0]
    from .subspace import subspace_sum
    for s in mem[1:]:
        common = intersect(common, s)
        join = subspace_sum(join, s)
    if common.dim == 1 and len(mem) == gaussian_binomial(q, n - 1, k - 1):
        return "sunflower"
    if n == 2 * k and join.dim == n - 1 \
            and len(mem) == gaussian_binomial(q, n - 1, k):
        return "hyperplane"
    return "other"


def design_identity_solutions(n_max: int, d_max: int) -> list[tuple[int, int]]:
    """All (n, d) with n >= 2d+1 solving 2^(n-d-1) = 2^(2d-1) + 2^(d-1) - 1.

    This is the integer identity a maximum-size binary equidistant code
    forces through its symmetric-design parameters; (3, 1) should be the
    only solution.
    """
    if n_max < 3 or d_max < 1:
        raise ValueError("need n_max >= 3 and d_max >= 1")
    out = []
    for n in range(3, n_max + 1):
        for d in range(1, d_max + 1):
            if n < 2 * d + 1:
                continue
            if 2 ** (n - d - 1) == 2 ** (2 * d - 1) + 2 ** (d - 1) - 1:
                out.append((n, d))
    return out


def ramanujan_nagell_solutions(x_max: int) -> list[int]:
    """All x <= x_max with x^2 + 7 a power of two.

    Enumerates powers of two and tests for perfect squares, so large
    ranges stay cheap; expected answer is [1, 3, 5, 11, 181].
    """
    if x_max < 1:
        raise ValueError("need x_max >= 1")
    out = []
    m = 3
    limit = x_max * x_max + 7
    while (1 << m) <= limit:
        y = (1 << m) - 7
        x = isqrt(y)
        if x * x == y and 1 <= x <= x_max:
            out.append(x)
        m += 1
    return sorted(out)


@dataclass(frozen=True)
class TableCensus:
    """Count of admissible addition tables on a fixed codeword set."""

    size: int
    total_tables: int          # symmetric, unipotent, Latin, identity-fixed
    valid_tables: int          # additionally pass all four axioms

    def to_dict(self) -> dict:
        return {"size": self.size, "total_tables": self.total_tables,
                "valid_tables": self.valid_tables}


def count_addition_tables(code_template: LinearCode) -> TableCensus:
    """Exhaustively fill addition tables over the codeword set and count
    how many satisfy the full axiom set.

    Fixed cells: identity row/column and the zero diagonal.  Free cells
    are filled by backtracking under symmetry and the Latin row property,
    then each completion runs through the verifier.
    """
    m = code_template.size
    cells = [(i, j) for i in range(1, m) for j in range(i + 1, m)]
    table = [[0] * m for _ in range(m)]
    for i in range(m):
        table[i][0] = table[0][i] = i
    used = [1 << i for i in range(m)]  # bitmask of values taken per row
    total = 0
    valid = 0

    def associative() -> bool:
        for i in range(m):
            ti = table[i]
            for j in range(m):
                row = table[ti[j]]
                tj = table[j]
                for k in range(m):
                    if row[k] != ti[tj[k]]:
                        return False
        return True

    def backtrack(idx: int) -> None:
        nonlocal total, valid
        if idx == len(cells):
            total += 1
            # Cheap associativity reject before the full verifier pass.
            if not associative():
                return
            cand = LinearCode(code_template.field, code_template.n,
                              code_template.codewords,
                              tuple(tuple(r) for r in table))
            if verify_linear(cand).passed:
                valid += 1
            return
        i, j = cells[idx]
        taken = used[i] | used[j] | 1
        for v in range(1, m):
            if taken >> v & 1:
                continue
            table[i][j] = table[j][i] = v
            bit = 1 << v
            used[i] |= bit
            used[j] |= bit
            backtrack(idx + 1)
            used[i] &= ~bit
            used[j] &= ~bit
        table[i][j] = table[j][i] = 0

    backtrack(0)
    return TableCensus(size=m, total_tables=total, valid_tables=valid)


@dataclass(frozen=True)
class StsCensus:
    v: int
    labeled_count: int
    associative_lifts: Optional[int]   # only for v = 2^m - 1

    def to_dict(self) -> dict:
        return {"v": self.v, "labeled_count": self.labeled_count,
                "associative_lifts": self.associative_lifts}


def count_labeled_sts(v: int, check_lifts: bool = True) -> StsCensus:
    """Count labeled Steiner triple systems on {0..v-1} by backtracking.

    Each system is built by always covering the least uncovered pair, so
    every labeled system arises exactly once.  For v = 2^m - 1 the census
    also lifts each system to an addition table with adjoined identity
    and counts the associative ones.
    """
    if v not in (3, 7, 9):
        raise ValueError("labeled census is desk-scale only: v in {3, 7, 9}")
    pair_used = [[False] * v for _ in range(v)]
    count = 0
    lift_applicable = check_lifts and (v + 1) & v == 0
    associative = 0
    triples: list[tuple[int, int, int]] = []

    def lift_is_associative() -> bool:
        m = v + 1
        t = [[0] * m for _ in range(m)]
        for i in range(m):
            t[i][0] = t[0][i] = i
        for (a, b, c) in triples:
            for (x, y, z) in ((a, b, c), (a, c, b), (b, c, a)):
                t[x + 1][y + 1] = t[y + 1][x + 1] = z + 1
        for i in range(m):
            ti = t[i]
            for j in range(m):
                tij = ti[j]
                row_t = t[tij]
                tj = t[j]
                for k in range(m):
                    if row_t[k] != ti[tj[k]]:
                        return False
        return True

    def first_uncovered() -> Optional[tuple[int, int]]:
        for a in range(v):
            row = pair_used[a]
            for b in range(a + 1, v):
                if not row[b]:
                    return a, b
        return None

    def backtrack() -> None:
        nonlocal count, associative
        nxt = first_uncovered()
        if nxt is None:
            count += 1
            if lift_applicable and lift_is_associative():
                associative += 1
            return
        a, b = nxt
        row_a, row_b = pair_used[a], pair_used[b]
        for c in range(b + 1, v):
            if row_a[c] or row_b[c]:
                continue
            row_a[b] = row_b[a] = True
            row_a[c] = pair_used[c][a] = True
            row_b[c] = pair_used[c][b] = True
            triples.append((a, b, c))
            backtrack()
            triples.pop()
            row_a[b] = row_b[a] = False
            row_a[c] = pair_used[c][a] = False
            row_b[c] = pair_used[c][b] = False

    backtrack()
    return StsCensus(v=v, labeled_count=count,
                     associative_lifts=associative if lift_applicable else None)


@dataclass(frozen=True)
class UniquenessReport:
    """Evidence that P_2(3) carries exactly one maximum codeword set."""

    codeword_set_count: int
    witness_is_full_grassmannian: bool
    plane_order: Optional[int]
    table_census: TableCensus
    sts_census: StsCensus
    consistent: bool

    @property
    def passed(self) -> bool:
        return (self.codeword_set_count == 1
                and self.witness_is_full_grassmannian
                and self.plane_order == 2 and self.consistent)

    def to_dict(self) -> dict:
        return {"codeword_set_count": self.codeword_set_count,
                "witness_is_full_grassmannian":
                    self.witness_is_full_grassmannian,
                "plane_order": self.plane_order,
                "table_census": self.table_census.to_dict(),
                "sts_census": self.sts_census.to_dict(),
                "passed": self.passed}


def verify_fano_uniqueness() -> UniquenessReport:
    """Exhaustively certify the unique maximum codeword set in P_2(3).

    The 1-intersecting search over the 7 planes of F_2^3 must return one
    maximum family (the whole Grassmannian), its collapsed blocks must be
    the projective plane of order 2, and the count of admissible addition
    tables must match the labeled triple-system census with every lift
    forming a group.
    """
    from .construct import collapse_blocks

    res = max_intersecting_family(2, 3, 2, 1)
    fld = field_make(2)
    full = tuple(enumerate_grassmannian(fld, 3, 2))
    is_full = (res.witness_count == 1 and len(res.witnesses) == 1
               and res.witnesses[0] == full)

    cws = (zero_subspace(fld, 3),) + full
    template = code_make(fld, 3, cws)
    v_pts, blocks = collapse_blocks(
        LinearCode(fld, 3, cws, None))
    plane = is_projective_plane(blocks, v=v_pts)

    tables = count_addition_tables(template)
    sts = count_labeled_sts(7)
    consistent = (tables.valid_tables == sts.labeled_count
                  and sts.associative_lifts == sts.labeled_count)
    return UniquenessReport(
        codeword_set_count=res.witness_count or 0,
        witness_is_full_grassmannian=is_full,
        plane_order=plane, table_census=tables, sts_census=sts,
        consistent=consistent)


@dataclass(frozen=True)
class GapEntry:
    d: int
    family_max: int
    exhausted: bool
    bound: int
    strict: bool

    def to_dict(self) -> dict:
        return {"d": self.d, "family_max": self.family_max,
                "exhausted": self.exhausted, "bound": self.bound,
                "strict": self.strict}


@dataclass(frozen=True)
class GapReport:
    """Largest binary d-intersecting families stay below 2^n - 1."""

    n: int
    entries: tuple[GapEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.exhausted and e.strict for e in self.entries)

    def to_dict(self) -> dict:
        return {"n": self.n, "entries": [e.to_dict() for e in self.entries],
                "passed": self.passed}


def verify_family_size_gap(n: int,
                           budget: Optional[int] = None) -> GapReport:
    """For q=2 and each d, certify max family size < 2^n - 1 by search."""
    if not 4 <= n <= 6:
        raise ValueError("desk-scale check: 4 <= n <= 6")
    bound = 2 ** n - 1
    entries = []
    for d in range(1, n // 2 + 1):
        res = max_intersecting_family(2, n, 2 * d, d, budget=budget,
                                      census=False)
        entries.append(GapEntry(d=d, family_max=res.max_size,
                                exhausted=res.exhausted, bound=bound,
                                strict=res.max_size < bound))
    return GapReport(n=n, entries=tuple(entries))


@dataclass(frozen=True)
class HalfspaceEntry:
    d: int
    mode: str                      # "pairing" for n = 4d, else "symmetry"
    ok: bool
    detail: dict

    def to_dict(self) -> dict:
        return {"d": self.d, "mode": self.mode, "ok": self.ok,
                "detail": self.detail}


@dataclass(frozen=True)
class HalfspaceReport:
    """Can an equidistant linear code fill more than half of P_q(n)?

    For n = 4d the classical argument pairs each subspace with its
    orthogonal complement; the census records whether that pairing step
    actually excludes complements from a common family (in characteristic
    p it can fail), while the size bound itself is certified by search.
    """

    q: int
    n: int
    entries: tuple[HalfspaceEntry, ...]
    pairing_step_ok: Optional[bool]
    conclusion_ok: bool
    ratio: Optional[RatioReport]

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n,
                "entries": [e.to_dict() for e in self.entries],
                "pairing_step_ok": self.pairing_step_ok,
                "conclusion_ok": self.conclusion_ok,
                "ratio": self.ratio.to_dict() if self.ratio else None}


def verify_halfspace(q: int, n: int, budget: Optional[int] = None,
                     include_search: bool = True) -> HalfspaceReport:
    """Check the half-of-the-space bound for each admissible distance.

    For n != 4d the bound follows from Grassmannian symmetry and is an
    integer inequality; for n = 4d it needs the complement pairing, which
    is audited rather than assumed.
    """
    if q > 5 or n > 6 or n < 3:
        raise ValueError("desk-scale check: q <= 5 and 3 <= n <= 6")
    fld = field_make(q)
    space = projective_space_size(q, n)
    entries = []
    pairing_ok: Optional[bool] = None
    conclusion = True
    for d in range(1, n // 2 + 1):
        g_size = gaussian_binomial(q, n, 2 * d)
        if n == 4 * d:
            subs = enumerate_grassmannian(fld, n, 2 * d)
            fixed = 0
            meet_hist: dict[int, int] = {}
            involution = True
            compat = 0
            example = None
            for x in subs:
                xp = orthogonal_complement(x)
                if orthogonal_complement(xp) != x:
                    involution = False
                if xp == x:
                    fixed += 1
                md = intersect(x, xp).dim
                meet_hist[md] = meet_hist.get(md, 0) + 1
                if md == d:
                    compat += 1
                    if example is None:
                        example = [[list(r) for r in x.rows],
                                   [list(r) for r in xp.rows]]
            step_ok = involution and fixed == 0 and compat == 0
            pairing_ok = step_ok if pairing_ok is None \
                else (pairing_ok and step_ok)
            detail = {"grassmannian_size": g_size,
                      "involution": involution,
                      "fixed_points": fixed,
                      "meet_dim_histogram":
                          {str(k): v for k, v in sorted(meet_hist.items())},
                      "compatible_complement_pairs": compat,
                      "counterexample": example}
            ok = True
            if include_search:
                res = max_intersecting_family(q, n, 2 * d, d, budget=budget,
                                              census=False)
                detail["family_max"] = res.max_size
                detail["exhausted"] = res.exhausted
                half = g_size // 2
                detail["half_grassmannian"] = half
                ok = res.exhausted and res.max_size <= half
            entries.append(HalfspaceEntry(d=d, mode="pairing", ok=ok,
                                          detail=detail))
            conclusion = conclusion and ok
        else:
            lhs = 2 * (1 + g_size)
            ok = lhs <= space
            equality = lhs == space
            entries.append(HalfspaceEntry(
                d=d, mode="symmetry", ok=ok,
                detail={"two_one_plus_grassmannian": lhs,
                        "space_size": space, "equality": equality}))
            conclusion = conclusion and ok
    ratio = ratio_report(q) if n == 3 else None
    if ratio is not None:
        conclusion = conclusion and ratio.within_bounds
    return HalfspaceReport(q=q, n=n, entries=tuple(entries),
                           pairing_step_ok=pairing_ok,
                           conclusion_ok=conclusion, ratio=ratio)
