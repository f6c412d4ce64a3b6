"""Strictly decreasing tuples that record the arc structure of a tangle.

A degree-n tangle with k upper (or lower) arcs determines the tuple of the
arcs' leftmost endpoints, written in decreasing order.  The tuples arising
this way are exactly the integer tuples (x_1 > ... > x_k >= 1) with
x_i <= n - 2i + 1, so in particular k <= n // 2.  We call the set of such
tuples T_n; this module validates, enumerates and serializes its members.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    BoundViolation,
    DegreeError,
    LengthOutOfRange,
    NotDecreasing,
)

__all__ = [
    "TnTuple",
    "check_tuple",
    "enumerate_tuples",
    "tuple_to_text",
    "tuple_from_text",
]


@dataclass(frozen=True)
class TnTuple:
    """A member of T_n.  Build through :func:`check_tuple`."""

    n: int
    entries: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def check_tuple(n: int, entries) -> TnTuple:
    """Validate membership in T_n and return the tuple.

    Raises NotDecreasing if the entries are not a strictly decreasing chain
    of positive integers, and BoundViolation (with the offending 1-based
    index i and the bound n - 2i + 1) if an entry is too large.
    """
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    ent = tuple(int(e) for e in entries)
    for a, b in zip(ent, ent[1:]):
        if a <= b:
            raise NotDecreasing(f"{a} is not above {b}")
    if ent and ent[-1] < 1:
        raise NotDecreasing(f"entries must be >= 1, got {ent[-1]}")
    for i, e in enumerate(ent, start=1):
        bound = n - 2 * i + 1
        if e > bound:
            raise BoundViolation(i, e, bound)
    return TnTuple(n, ent)


def enumerate_tuples(n: int, k: int | None = None) -> list[TnTuple]:
    """All members of T_n (of length k if given), in lexicographic order.

    Depth-first emission with ascending entries is exactly lexicographic
    order on the entry lists, which keeps golden tests stable.
    """
    if n < 1:
        raise DegreeError(f"degree must be >= 1, got {n}")
    if k is not None and not 0 <= k <= n // 2:
        raise LengthOutOfRange(f"length {k} outside [0, {n // 2}]")
    out: list[TnTuple] = []

    def grow(prefix: tuple[int, ...]) -> None:
        if k is None or len(prefix) == k:
            out.append(TnTuple(n, prefix))
        if k is not None and len(prefix) >= k:
            return
        i = len(prefix) + 1
        hi = n - 2 * i + 1
        if prefix:
            hi = min(hi, prefix[-1] - 1)
        for v in range(1, hi + 1):
            grow(prefix + (v,))

    grow(())
    return out


# -- text format: `n=<int>; x=(5,3,2)`, empty tuple printed `()` -------------

_TUPLE_RE = re.compile(r"^n=(\d+);\s*x=\(([\d,\s]*)\)$")


def tuple_to_text(x: TnTuple) -> str:
    return f"n={x.n}; x={x}"


def tuple_from_text(text: str) -> TnTuple:
    m = _TUPLE_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse tuple text: {text!r}")
    n = int(m.group(1))
    body = m.group(2).strip()
    entries = [int(tok) for tok in body.split(",")] if body else []
    return check_tuple(n, entries)
