"""JSON file formats for codes, families, and triple systems.

Subspaces serialize as arrays of rows, each row an array of integer
element indices; the zero subspace is the empty array.  Codes carry
{"q", "n", "size", "codewords", "table"?}; triple systems carry
{"v", "triples"}; families carry {"q", "n", "k", "lambda", "members"}.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .construct import IntersectingFamily
from .designs import STS
from .gfq import field_make
from .lincode import LinearCode, code_make
from .subspace import Subspace, span


def subspace_to_rows(s: Subspace) -> list[list[int]]:
    return [list(r) for r in s.rows]


def subspace_from_rows(q: int, n: int,
                       rows: Sequence[Sequence[int]]) -> Subspace:
    f = field_make(q)
    return span(f, n, [tuple(r) for r in rows])


def code_to_dict(code: LinearCode) -> dict[str, Any]:
    out: dict[str, Any] = {
        "q": code.field.q,
        "n": code.n,
        "size": code.size,
        "codewords": [subspace_to_rows(c) for c in code.codewords],
    }
    if code.table is not None:
        out["table"] = [list(r) for r in code.table]
    return out


def code_from_dict(data: dict[str, Any]) -> LinearCode:
    q = int(data["q"])
    n = int(data["n"])
    f = field_make(q)
    cws = [span(f, n, [tuple(r) for r in rows]) for rows in data["codewords"]]
    if "size" in data and int(data["size"]) != len(cws):
        raise ValueError("size field disagrees with codeword count")
    return code_make(f, n, cws, data.get("table"))


def sts_to_dict(sts: STS) -> dict[str, Any]:
    return {"v": sts.v, "triples": [list(t) for t in sts.triples]}


def sts_from_dict(data: dict[str, Any]) -> tuple[int, list[tuple[int, ...]]]:
    return int(data["v"]), [tuple(int(x) for x in t)
                            for t in data["triples"]]


def family_to_dict(fam: IntersectingFamily) -> dict[str, Any]:
    return {"q": fam.field.q, "n": fam.n, "k": fam.k, "lambda": fam.lam,
            "members": [subspace_to_rows(m) for m in fam.members]}


def family_from_dict(data: dict[str, Any]) -> IntersectingFamily:
    q = int(data["q"])
    n = int(data["n"])
    f = field_make(q)
    members = [span(f, n, [tuple(r) for r in rows])
               for rows in data["members"]]
    lam = data.get("lambda")
    return IntersectingFamily.make(f, n, members,
                                   lam=int(lam) if lam is not None else None)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"
