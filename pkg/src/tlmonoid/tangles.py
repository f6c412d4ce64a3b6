"""Exact planar-tangle calculus for the Temperley-Lieb monoid TL_n.

A degree-n tangle is n disjoint strings in a rectangle joining the 2n
boundary points; up to homotopy it is determined by the induced perfect
matching on the boundary, so we store exactly that.  Points are signed
integers: +i is the i-th upper point, -i the i-th lower point.  Walking the
boundary cycle (upper row left to right, then lower row right to left) gives
each point a position

    pos(+i) = i,     pos(-i) = 2n + 1 - i,

and planarity of the strings is equivalent to no two blocks interleaving in
position order.  Composition stacks one diagram on top of another, fuses
the middle row, discards the closed loops that appear in the interior and
reports how many were discarded; that count is the exponent used by the
twisted algebra product.  `dagger` is the top-bottom reflection, which makes
TL_n a regular *-monoid.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import (
    CrossingError,
    DegreeError,
    DegreeMismatch,
    LengthMismatch,
    NotAMatching,
)
from .tuples import TnTuple, check_tuple

__all__ = [
    "Tangle",
    "make_tangle",
    "identity",
    "generator",
    "compose",
    "dagger",
    "profile",
    "boundary_tuples",
    "simplicity",
    "build_tangle",
    "factorize",
    "tangle_to_text",
    "tangle_from_text",
    "tangle_to_doc",
    "tangle_from_doc",
]


class Tangle:
    """An immutable degree-n tangle in canonical block form.

    Do not call the constructor with unchecked data; `make_tangle` validates
    and canonicalizes.  `blocks` is a tuple of point pairs, each pair ordered
    by boundary position and the pairs sorted by first position, so equality
    and hashing are plain structural comparisons.
    """

    __slots__ = ("n", "blocks", "_hash", "_pairs")

    def __init__(self, n: int, blocks: tuple[tuple[int, int], ...]):
        self.n = n
        self.blocks = blocks
        self._hash = hash((n, blocks))
        self._pairs = None

    def __eq__(self, other):
        if not isinstance(other, Tangle):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Tangle[{tangle_to_text(self)}]"

    def pair_array(self) -> list[int]:
        """Partner table indexed by encoded point (+i -> i, -i -> n+i)."""
        if self._pairs is None:
            n = self.n
            p = [0] * (2 * n + 1)
            for u, v in self.blocks:
                eu = u if u > 0 else n - u
                ev = v if v > 0 else n - v
                p[eu] = ev
                p[ev] = eu
            self._pairs = p
        return self._pairs


def _pos(v: int, two_n1: int) -> int:
    return v if v > 0 else two_n1 + v


def _canonical_blocks(n, pairs):
    two_n1 = 2 * n + 1
    out = []
    for u, v in pairs:
        if _pos(u, two_n1) < _pos(v, two_n1):
            out.append((u, v))
        else:
            out.append((v, u))
    out.sort(key=lambda blk: _pos(blk[0], two_n1))
    return tuple(out)


def _nested_ok(n, canonical_blocks) -> bool:
    # O(n) balanced-nesting check; valid only on canonicalized blocks.
    two_n1 = 2 * n + 1
    closer = [0] * (two_n1 + 1)
    for u, v in canonical_blocks:
        closer[_pos(u, two_n1)] = _pos(v, two_n1)
    stack = []
    for p in range(1, two_n1):
        c = closer[p]
        if c:
            stack.append(c)
        else:
            if not stack or stack.pop() != p:
                return False
    return not stack


def make_tangle(n: int, blocks) -> Tangle:
    """Validating constructor.

    Raises DegreeError for n < 1, NotAMatching unless every point of
    {+-1, ..., +-n} occurs in exactly one two-point block, and CrossingError
    (naming the two offending blocks) if any blocks interleave.  Blocks of
    size other than two are rejected: this monoid has no wider blocks.
    """
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"degree must be a positive integer, got {n!r}")
    seen = set()
    pairs = []
    for blk in blocks:
        blk = tuple(blk)
        if len(blk) != 2:
            raise NotAMatching(f"block {blk} does not have exactly 2 points")
        u, v = int(blk[0]), int(blk[1])
        for w in (u, v):
            if w == 0 or abs(w) > n:
                raise NotAMatching(f"point {w} outside degree {n}")
            if w in seen:
                raise NotAMatching(f"point {w} appears more than once")
            seen.add(w)
        if u == v:
            raise NotAMatching(f"block {blk} repeats a point")
        pairs.append((u, v))
    if len(pairs) != n:
        raise NotAMatching(f"expected {n} blocks, got {len(pairs)}")

    canon = _canonical_blocks(n, pairs)
    # pairwise interleaving check, kept quadratic for clarity
    two_n1 = 2 * n + 1
    spans = [(_pos(u, two_n1), _pos(v, two_n1)) for u, v in canon]
    for a in range(len(spans)):
        pa, qa = spans[a]
        for b in range(a + 1, len(spans)):
            pb, qb = spans[b]
            if pa < pb < qa < qb or pb < pa < qb < qa:
                raise CrossingError(canon[a], canon[b])
    return Tangle(n, canon)


@lru_cache(maxsize=None)
def identity(n: int) -> Tangle:
    """The unit of TL_n: n vertical strings."""
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"degree must be a positive integer, got {n!r}")
    return Tangle(n, tuple((i, -i) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def _generator(n: int, kind: str, i: int) -> Tangle:
    if kind == "lambda":
        blocks = [(j, -j) for j in range(1, i)]
        blocks.append((i, i + 1))
        blocks.extend((j, -(j - 2)) for j in range(i + 2, n + 1))
        blocks.append((-(n - 1), -n))
        return Tangle(n, _canonical_blocks(n, blocks))
    if kind == "rho":
        return dagger(_generator(n, "lambda", i))
    # hook generator e_i
    blocks = [(j, -j) for j in range(1, n + 1) if j != i and j != i + 1]
    blocks.append((i, i + 1))
    blocks.append((-i, -(i + 1)))
    return Tangle(n, _canonical_blocks(n, blocks))


_KIND_ALIASES = {
    "lambda": "lambda", "l": "lambda",
    "rho": "rho", "r": "rho",
    "e": "e",
}


def generator(n: int, kind: str, i: int) -> Tangle:
    """One of the three basic diagrams of degree n.

    `lambda` joins i to i+1 on top and shifts the strands right of the arc
    two places left, closing with a lower arc at n-1, n; `rho` is its
    reflection; `e` is the hook with arcs {i, i+1} on both rows.  Requires
    1 <= i <= n - 1 (so n >= 2); raises IndexError otherwise.
    """
    key = _KIND_ALIASES.get(str(kind).lower())
    if key is None:
        raise ValueError(f"unknown generator kind {kind!r}")
    if not isinstance(n, int) or not 1 <= i <= n - 1:
        raise IndexError(f"generator index {i} outside [1, {n - 1}]")
    return _generator(n, key, i)


def compose(a: Tangle, b: Tangle) -> tuple[Tangle, int]:
    """Stack `a` on top of `b`; return the resulting tangle and loop count.

    Strings are traced through the fused middle row; connected components
    with two boundary endpoints become blocks, components that never reach
    the boundary are the interior loops.
    """
    if a.n != b.n:
        raise DegreeMismatch(f"degrees {a.n} and {b.n} differ")
    n = a.n
    pa = a.pair_array()
    pb = b.pair_array()
    blocks = []
    used_top = [False] * (n + 1)
    used_bot = [False] * (n + 1)
    mid_seen = [False] * (n + 1)

    for i in range(1, n + 1):
        if used_top[i]:
            continue
        used_top[i] = True
        in_a, cur = True, pa[i]
        while True:
            if in_a:
                if cur <= n:            # another upper point of a
                    used_top[cur] = True
                    blocks.append((i, cur))
                    break
                m = cur - n             # fall through the middle row into b
                mid_seen[m] = True
                in_a, cur = False, pb[m]
            else:
                if cur > n:             # a lower point of b
                    j = cur - n
                    used_bot[j] = True
                    blocks.append((i, -j))
                    break
                mid_seen[cur] = True    # climb back into a
                in_a, cur = True, pa[n + cur]

    for j in range(1, n + 1):
        if used_bot[j]:
            continue
        used_bot[j] = True
        in_b, cur = True, pb[n + j]
        while True:
            if in_b:
                if cur > n:
                    used_bot[cur - n] = True
                    blocks.append((-j, -(cur - n)))
                    break
                mid_seen[cur] = True
                in_b, cur = False, pa[n + cur]
            else:
                # paths from the bottom cannot end on top: those were all
                # emitted by the first sweep
                m = cur - n
                mid_seen[m] = True
                in_b, cur = True, pb[m]

    loops = 0
    for m in range(1, n + 1):
        if mid_seen[m]:
            continue
        loops += 1
        mid_seen[m] = True
        cur, in_b = m, True
        while True:
            if in_b:
                cur, in_b = pb[cur], False
            else:
                cur, in_b = pa[n + cur] - n, True
            if in_b and cur == m:
                break
            mid_seen[cur] = True

    canon = _canonical_blocks(n, blocks)
    result = Tangle(n, canon)
    assert _nested_ok(n, canon), "composition broke planarity"
    return result, loops


def dagger(a: Tangle) -> Tangle:
    """Reflection through the horizontal midline: every point changes sign."""
    return Tangle(a.n, _canonical_blocks(a.n, [(-u, -v) for u, v in a.blocks]))


def profile(a: Tangle) -> tuple[int, frozenset, frozenset]:
    """(rank, dom, codom): through-strand count and its endpoint sets.

    The rank always has the parity of n, which is asserted.
    """
    dom = set()
    codom = set()
    for u, v in a.blocks:
        if u > 0 and v < 0:
            dom.add(u)
            codom.add(-v)
    rank = len(dom)
    assert rank % 2 == a.n % 2, "rank parity violated"
    return rank, frozenset(dom), frozenset(codom)


def boundary_tuples(a: Tangle) -> tuple[TnTuple, TnTuple]:
    """(bl, br): leftmost endpoints of the upper / lower arcs, decreasing.

    Both results are validated members of T_n.
    """
    upper = []
    lower = []
    for u, v in a.blocks:
        if u > 0 and v > 0:
            upper.append(min(u, v))
        elif u < 0 and v < 0:
            lower.append(min(-u, -v))
    upper.sort(reverse=True)
    lower.sort(reverse=True)
    return check_tuple(a.n, upper), check_tuple(a.n, lower)


def _packed_pattern(n: int, k: int) -> tuple[int, ...]:
    # (n-1, n-3, ..., n-2k+1): arcs packed against the right edge
    return tuple(range(n - 1, n - 2 * k, -2))


def simplicity(a: Tangle) -> tuple[bool, bool]:
    """(left_simple, right_simple) flags.

    A tangle is right-simple when its lower arcs are packed into the
    rightmost positions, i.e. br equals (n-1, n-3, ..., n-2k+1); dually for
    left-simple with bl.  Reflection swaps the two flags.
    """
    bl, br = boundary_tuples(a)
    left = bl.entries == _packed_pattern(a.n, len(bl.entries))
    right = br.entries == _packed_pattern(a.n, len(br.entries))
    return left, right


def build_tangle(x: TnTuple, y: TnTuple) -> Tangle:
    """Evaluate the balanced generator word for the pair (x, y).

    Multiplies the lambda generators in entry order of x, then the rho
    generators in reversed entry order of y.  The result is the unique
    tangle with bl = x and br = y; rank and both tuples are asserted.
    """
    if x.n != y.n:
        raise DegreeMismatch(f"degrees {x.n} and {y.n} differ")
    if len(x) != len(y):
        raise LengthMismatch(f"|x|={len(x)} but |y|={len(y)}")
    n = x.n
    t = identity(n)
    for i in x.entries:
        t, _ = compose(t, generator(n, "lambda", i))
    for i in reversed(y.entries):
        t, _ = compose(t, generator(n, "rho", i))
    if __debug__:
        bl, br = boundary_tuples(t)
        assert profile(t)[0] == n - 2 * len(x)
        assert bl == x and br == y
    return t


def factorize(a: Tangle) -> tuple[TnTuple, TnTuple]:
    """The balanced pair (bl, br); inverse of `build_tangle`."""
    return boundary_tuples(a)


# -- text and structured-document formats ------------------------------------

def tangle_to_text(t: Tangle) -> str:
    body = "".join(f"({u},{v})" for u, v in t.blocks)
    return f"n={t.n}; blocks={body}"


def tangle_from_text(text: str) -> Tangle:
    text = text.strip()
    head, sep, body = text.partition(";")
    if not sep or not head.startswith("n="):
        raise ValueError(f"cannot parse tangle text: {text!r}")
    try:
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"bad degree token {head!r}") from None
    body = body.strip()
    if not body.startswith("blocks="):
        raise ValueError(f"bad blocks token {body!r}")
    rest = body[len("blocks="):]
    blocks = []
    import re

    pos = 0
    pat = re.compile(r"\((-?\d+),(-?\d+)\)")
    while pos < len(rest):
        m = pat.match(rest, pos)
        if not m:
            raise ValueError(f"bad block token at {rest[pos:pos+16]!r}")
        blocks.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
    return make_tangle(n, blocks)


def tangle_to_doc(t: Tangle) -> dict:
    return {"n": t.n, "blocks": [[u, v] for u, v in t.blocks]}


def tangle_from_doc(doc: dict) -> Tangle:
    return make_tangle(int(doc["n"]), doc["blocks"])
