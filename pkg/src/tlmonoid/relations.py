"""The defining relations of TL_n over its three alphabets.

Family Omega lives on L u R and splits into

    L1(i):    L_i L_{n-1}            = L_i
    L2(i,j):  L_i L_j                = L_{j+2} L_i        (i <= j <= n-3)
    L3(i):    L_{n-2i+1}^i L_{n-2i}  = L_{n-2i+1}^i
    R1(i):    R_{n-1} R_i            = R_i
    R2(i,j):  R_j R_i                = R_i R_{j+2}        (i <= j <= n-3)
    R3(i):    R_{n-2i} R_{n-2i+1}^i  = R_{n-2i+1}^i
    RL1(i,j): R_i L_j                = L_{n-1} L_j R_{i-2}  (j <= i-2)
    RL2(i,j): R_i L_j                = L_{n-1}              (|i-j| <= 1)
    RL3(i,j): R_i L_j                = L_{n-1} L_{j-2} R_i  (j >= i+2)
    A:        L_{n-1}                = R_{n-1}

(the alias A carries the identification of the two top-index generators,
so every step names a single unambiguous replacement).  Family Xi lives on
the hook alphabet:

    E1(i):    E_i E_i     = E_i
    E2(i,j):  E_i E_j     = E_j E_i     (|i-j| > 1)
    E3(i,j):  E_i E_j E_i = E_i        (|i-j| = 1)

Relations are instantiated eagerly per degree and cached, since the
verification passes sweep them many times.  Powers in L3/R3 are stored as
explicit letter repetitions so that positional matching works on words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DegreeTooSmall, NoMatch, ZeroDelta
from .words import Letter, Word, evaluate, letter

__all__ = [
    "Relation",
    "Step",
    "TwistedRelation",
    "relation_set",
    "relation_index",
    "relation_by_id",
    "apply_step",
    "step_to_text",
    "step_from_text",
    "twist_relations",
    "FAMILIES",
]

FAMILIES = ("OmegaL", "OmegaR", "Omega", "Xi")


@dataclass(frozen=True)
class Relation:
    rid: str
    lhs: tuple[Letter, ...]
    rhs: tuple[Letter, ...]

    def __str__(self) -> str:
        lhs = " ".join(map(str, self.lhs)) or "1"
        rhs = " ".join(map(str, self.rhs)) or "1"
        return f"{self.rid}: {lhs} = {rhs}"


@dataclass(frozen=True, slots=True)
class Step:
    """A single relation application at an absolute word position."""

    pos: int
    rid: str
    forward: bool = True

    def __str__(self) -> str:
        return step_to_text(self)


def _L(i):
    return letter("L", i)


def _R(i):
    return letter("R", i)


def _E(i):
    return letter("E", i)


def _need(cond: bool, rid: str, why: str) -> None:
    if not cond:
        raise ValueError(f"{rid}: {why}")


# -- single-instance constructors; shared by family builders and id lookup ----

def _rel_L1(n, i):
    _need(1 <= i <= n - 1, f"L1({i})", f"index outside [1,{n - 1}]")
    return Relation(f"L1({i})", (_L(i), _L(n - 1)), (_L(i),))


def _rel_L2(n, i, j):
    _need(1 <= i <= j <= n - 3, f"L2({i},{j})", "requires 1 <= i <= j <= n-3")
    return Relation(f"L2({i},{j})", (_L(i), _L(j)), (_L(j + 2), _L(i)))


def _rel_L3(n, i):
    k = n - 2 * i + 1
    _need(i >= 1 and k - 1 >= 1, f"L3({i})", "requires 1 <= i <= (n-1)/2")
    return Relation(f"L3({i})", (_L(k),) * i + (_L(k - 1),), (_L(k),) * i)


def _rel_R1(n, i):
    _need(1 <= i <= n - 1, f"R1({i})", f"index outside [1,{n - 1}]")
    return Relation(f"R1({i})", (_R(n - 1), _R(i)), (_R(i),))


def _rel_R2(n, i, j):
    _need(1 <= i <= j <= n - 3, f"R2({i},{j})", "requires 1 <= i <= j <= n-3")
    return Relation(f"R2({i},{j})", (_R(j), _R(i)), (_R(i), _R(j + 2)))


def _rel_R3(n, i):
    k = n - 2 * i + 1
    _need(i >= 1 and k - 1 >= 1, f"R3({i})", "requires 1 <= i <= (n-1)/2")
    return Relation(f"R3({i})", (_R(k - 1),) + (_R(k),) * i, (_R(k),) * i)


def _rel_RL1(n, i, j):
    _need(1 <= j <= i - 2 and i <= n - 1, f"RL1({i},{j})", "requires j <= i-2")
    return Relation(f"RL1({i},{j})", (_R(i), _L(j)),
                    (_L(n - 1), _L(j), _R(i - 2)))


def _rel_RL2(n, i, j):
    _need(1 <= i <= n - 1 and 1 <= j <= n - 1 and abs(i - j) <= 1,
          f"RL2({i},{j})", "requires |i-j| <= 1")
    return Relation(f"RL2({i},{j})", (_R(i), _L(j)), (_L(n - 1),))


def _rel_RL3(n, i, j):
    _need(1 <= i and i + 2 <= j <= n - 1, f"RL3({i},{j})", "requires j >= i+2")
    return Relation(f"RL3({i},{j})", (_R(i), _L(j)),
                    (_L(n - 1), _L(j - 2), _R(i)))


def _rel_A(n):
    return Relation("A", (_L(n - 1),), (_R(n - 1),))


def _rel_E1(n, i):
    _need(1 <= i <= n - 1, f"E1({i})", f"index outside [1,{n - 1}]")
    return Relation(f"E1({i})", (_E(i), _E(i)), (_E(i),))


def _rel_E2(n, i, j):
    _need(1 <= i <= n - 1 and 1 <= j <= n - 1 and abs(i - j) > 1,
          f"E2({i},{j})", "requires |i-j| > 1")
    return Relation(f"E2({i},{j})", (_E(i), _E(j)), (_E(j), _E(i)))


def _rel_E3(n, i, j):
    _need(1 <= i <= n - 1 and 1 <= j <= n - 1 and abs(i - j) == 1,
          f"E3({i},{j})", "requires |i-j| = 1")
    return Relation(f"E3({i},{j})", (_E(i), _E(j), _E(i)), (_E(i),))


def _omega_L(n):
    rels = [_rel_L1(n, i) for i in range(1, n)]
    rels += [_rel_L2(n, i, j)
             for j in range(1, n - 2) for i in range(1, j + 1)]
    rels += [_rel_L3(n, i) for i in range(1, (n - 1) // 2 + 1)]
    return rels


def _omega_R(n):
    rels = [_rel_R1(n, i) for i in range(1, n)]
    rels += [_rel_R2(n, i, j)
             for j in range(1, n - 2) for i in range(1, j + 1)]
    rels += [_rel_R3(n, i) for i in range(1, (n - 1) // 2 + 1)]
    return rels


def _omega_RL(n):
    rels = [_rel_RL1(n, i, j) for i in range(3, n) for j in range(1, i - 1)]
    rels += [_rel_RL2(n, i, j) for i in range(1, n)
             for j in range(max(1, i - 1), min(n - 1, i + 1) + 1)]
    rels += [_rel_RL3(n, i, j) for i in range(1, n - 2)
             for j in range(i + 2, n)]
    rels.append(_rel_A(n))
    return rels


def _xi(n):
    rels = [_rel_E1(n, i) for i in range(1, n)]
    rels += [_rel_E2(n, i, j) for i in range(1, n) for j in range(1, n)
             if abs(i - j) > 1]
    rels += [_rel_E3(n, i, j) for i in range(1, n) for j in range(1, n)
             if abs(i - j) == 1]
    return rels


@lru_cache(maxsize=None)
def _family(n: int, which: str) -> tuple[Relation, ...]:
    if n < 3:
        raise DegreeTooSmall(f"presentations need n >= 3, got {n}")
    if which == "OmegaL":
        return tuple(_omega_L(n))
    if which == "OmegaR":
        return tuple(_omega_R(n))
    if which == "Omega":
        return tuple(_omega_L(n) + _omega_R(n) + _omega_RL(n))
    if which == "Xi":
        return tuple(_xi(n))
    raise ValueError(f"unknown relation family {which!r}; pick from {FAMILIES}")


def relation_set(n: int, which: str) -> list[Relation]:
    """All instances of the named family at degree n, deterministic order."""
    return list(_family(n, which))


@lru_cache(maxsize=None)
def relation_index(n: int, which: str) -> dict[str, Relation]:
    return {r.rid: r for r in _family(n, which)}


_RID_RE = re.compile(r"^([A-Z]+[0-9]*)(?:\((\d+)(?:,(\d+))?\))?$")

_CONSTRUCTORS = {
    ("L1", 1): _rel_L1, ("L2", 2): _rel_L2, ("L3", 1): _rel_L3,
    ("R1", 1): _rel_R1, ("R2", 2): _rel_R2, ("R3", 1): _rel_R3,
    ("RL1", 2): _rel_RL1, ("RL2", 2): _rel_RL2, ("RL3", 2): _rel_RL3,
    ("E1", 1): _rel_E1, ("E2", 2): _rel_E2, ("E3", 2): _rel_E3,
    ("A", 0): lambda n: _rel_A(n),
}


@lru_cache(maxsize=None)
def relation_by_id(n: int, rid: str) -> Relation:
    """Instantiate a relation from its symbolic id, validating parameters."""
    if n < 3:
        raise DegreeTooSmall(f"presentations need n >= 3, got {n}")
    m = _RID_RE.match(rid)
    if not m:
        raise ValueError(f"malformed relation id {rid!r}")
    name = m.group(1)
    args = [int(g) for g in m.groups()[1:] if g is not None]
    ctor = _CONSTRUCTORS.get((name, len(args)))
    if ctor is None:
        raise ValueError(f"unknown relation id {rid!r}")
    return ctor(n, *args)


def apply_step(w: Word, s: Step) -> Word:
    """Apply one relation instance at an explicit position.

    Forward replaces the left side by the right side; backward the reverse.
    Raises NoMatch (reporting expected versus found letters) if the matched
    side does not occur verbatim at the position.
    """
    rel = relation_by_id(w.n, s.rid)
    src, dst = (rel.lhs, rel.rhs) if s.forward else (rel.rhs, rel.lhs)
    p = s.pos
    found = w.letters[p:p + len(src)]
    if p < 0 or found != src:
        raise NoMatch(p, " ".join(map(str, src)) or "1",
                      " ".join(map(str, found)) or "1")
    return Word(w.n, w.letters[:p] + dst + w.letters[p + len(src):])


# -- step text format: `<pos>:<RelId>:<fwd|bwd>` ------------------------------

def step_to_text(s: Step) -> str:
    return f"{s.pos}:{s.rid}:{'fwd' if s.forward else 'bwd'}"


def step_from_text(text: str) -> Step:
    parts = text.strip().split(":")
    if len(parts) != 3 or parts[2] not in ("fwd", "bwd"):
        raise ValueError(f"bad step text {text!r}")
    try:
        pos = int(parts[0])
    except ValueError:
        raise ValueError(f"bad step position {parts[0]!r}") from None
    return Step(pos, parts[1], parts[2] == "fwd")


# -- twisted relations ---------------------------------------------------------

@dataclass(frozen=True)
class TwistedRelation:
    """delta^{m(rhs)} * lhs = delta^{m(lhs)} * rhs, over an exact field."""

    rid: str
    lhs_coeff: Fraction
    lhs: tuple[Letter, ...]
    rhs_coeff: Fraction
    rhs: tuple[Letter, ...]


def twist_relations(n: int, delta) -> list[TwistedRelation]:
    """The hook-algebra relation family obtained by loop-weighting Xi.

    Each side is weighted by delta raised to the number of loops closed by
    the opposite side, so only E1 picks up a nontrivial scalar and becomes
    E_i E_i = delta * E_i.
    """
    delta = Fraction(delta)
    if delta == 0:
        raise ZeroDelta("the twisted presentation requires delta != 0")
    out = []
    for rel in _family(n, "Xi"):
        m_lhs = evaluate(Word(n, rel.lhs))[1]
        m_rhs = evaluate(Word(n, rel.rhs))[1]
        out.append(TwistedRelation(
            rel.rid, delta ** m_rhs, rel.lhs, delta ** m_lhs, rel.rhs))
    return out
