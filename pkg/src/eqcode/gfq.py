"""Exact arithmetic in small Galois fields F_q, q = p^e <= 32.

A field element is an integer index in [0, q): the polynomial
c_0 + c_1*x + ... + c_{e-1}*x^{e-1} over F_p is encoded as
idx = sum(c_i * p**i).  Index 0 is the additive identity, index 1 the
multiplicative identity.  Each supported order carries a fixed primitive
polynomial, so encodings are identical across runs and machines.  All
arithmetic is precomputed into q x q tables at construction; q <= 32 keeps
them tiny and lookups branch-free.
"""

from __future__ import annotations

from functools import lru_cache


class UnsupportedOrder(ValueError):
    """Field order outside the built-in table of small prime powers."""


class DivisionByZero(ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


# order -> (p, e, polynomial coefficients c_0..c_e low to high, alpha index).
# The degree-e polynomials are the Conway polynomials for p^e, which are
# primitive, so x (index p) generates the multiplicative group.  For prime
# fields the polynomial is x - g with g the least primitive root mod p.
_FIELDS: dict[int, tuple[int, int, tuple[int, ...], int]] = {
    2: (2, 1, (1, 1), 1),
    3: (3, 1, (1, 1), 2),
    4: (2, 2, (1, 1, 1), 2),
    5: (5, 1, (3, 1), 2),
    7: (7, 1, (4, 1), 3),
    8: (2, 3, (1, 1, 0, 1), 2),
    9: (3, 2, (2, 2, 1), 3),
    11: (11, 1, (9, 1), 2),
    13: (13, 1, (11, 1), 2),
    16: (2, 4, (1, 1, 0, 0, 1), 2),
    17: (17, 1, (14, 1), 3),
    19: (19, 1, (17, 1), 2),
    23: (23, 1, (18, 1), 5),
    25: (5, 2, (2, 4, 1), 5),
    27: (3, 3, (1, 2, 0, 1), 3),
    29: (29, 1, (27, 1), 2),
    31: (31, 1, (28, 1), 3),
    32: (2, 5, (1, 0, 1, 0, 0, 1), 2),
}

SUPPORTED_ORDERS = frozenset(_FIELDS)


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], p: int,
                  irr: tuple[int, ...]) -> tuple[int, ...]:
    """Multiply coefficient vectors mod p and the monic polynomial irr."""
    e = len(irr) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c == 0:
            continue
        prod[d] = 0
        for i in range(e):
            prod[d - e + i] = (prod[d - e + i] - c * irr[i]) % p
    prod = prod[:e] + [0] * max(0, e - len(prod))
    return tuple(prod[:e])


class FieldSpec:
    """Immutable arithmetic context for F_q.

    Attributes mirror the construction: q = p^e, the fixed polynomial
    coefficients `irr`, a primitive element `alpha`, and full q x q
    add/mul tables plus neg/inv element tables.  Instances are shareable
    across threads; equality and hashing key on q alone since the tables
    are canonical per order.
    """

    __slots__ = ("q", "p", "e", "irr", "alpha", "add_table", "mul_table",
                 "neg_table", "inv_table")

    def __init__(self, q: int):
        if q not in _FIELDS:
            raise UnsupportedOrder(
                f"q={q} is not in the supported set {sorted(_FIELDS)}")
        p, e, irr, alpha = _FIELDS[q]
        self.q = q
        self.p = p
        self.e = e
        self.irr = irr
        self.alpha = alpha

        coeffs = [self._int_to_coeffs(a) for a in range(q)]
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._coeffs_to_int(tuple((x + y) % p for x, y
                                              in zip(coeffs[a], coeffs[b])))
                m = self._coeffs_to_int(_poly_mul_mod(coeffs[a], coeffs[b],
                                                      p, irr))
                add[a][b] = add[b][a] = s
                mul[a][b] = mul[b][a] = m
        self.add_table = tuple(tuple(r) for r in add)
        self.mul_table = tuple(tuple(r) for r in mul)

        neg = [0] * q
        inv = [0] * q
        for a in range(q):
            for b in range(q):
                if add[a][b] == 0:
                    neg[a] = b
                if a != 0 and mul[a][b] == 1:
                    inv[a] = b
        self.neg_table = tuple(neg)
        self.inv_table = tuple(inv)

        # alpha must generate the full multiplicative group.
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = mul[x][alpha]
            seen.add(x)
        if len(seen) != q - 1:
            raise AssertionError(f"alpha={alpha} is not primitive for q={q}")

    def _int_to_coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _coeffs_to_int(self, coeffs: tuple[int, ...]) -> int:
        val = 0
        for c in reversed(coeffs):
            val = val * self.p + c
        return val

    def coords(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, viewing F_q as F_p^e."""
        self._check(a)
        return self._int_to_coeffs(a)

    def from_coords(self, coeffs) -> int:
        if len(coeffs) != self.e:
            raise ValueError(f"need {self.e} coefficients, got {len(coeffs)}")
        return self._coeffs_to_int(tuple(c % self.p for c in coeffs))

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element index {a} out of range for q={self.q}")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self.inv_table[a]

    def power(self, a: int, k: int) -> int:
        """a**k with k any integer; negative k inverts first."""
        self._check(a)
        if k < 0:
            a, k = self.inv(a), -k
        out = 1
        while k:
            if k & 1:
                out = self.mul_table[out][a]
            a = self.mul_table[a][a]
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.q))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q})"


@lru_cache(maxsize=None)
def field_make(q: int) -> FieldSpec:
    """Build (and cache) the arithmetic context for F_q."""
    return FieldSpec(q)


def field_arith(field: FieldSpec, op: str, a: int, b: int | None = None) -> int:
    """Dispatch one of {add, mul, neg, inv} on element indices."""
    if op == "add":
        if b is None:
            raise ValueError("add needs two operands")
        return field.add(a, b)
    if op == "mul":
        if b is None:
            raise ValueError("mul needs two operands")
        return field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    raise ValueError(f"unknown op {op!r}")
