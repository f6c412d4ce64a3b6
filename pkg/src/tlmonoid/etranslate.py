"""Rewriting certificates over the hook alphabet.

Under the substitution L_i -> E_i E_{i+1} .. E_{n-1}, R_i -> E_{n-1} .. E_i,
every lambda/rho relation instance maps to a fixed chain of E1/E2/E3
rewrites.  This module constructs those chains as replayable step templates
and uses them to translate a whole Omega derivation, step by step, into an
E-alphabet derivation.  The key ingredients:

  * the telescope E_i E_{i+1}..E_{n-1} E_{n-1}..E_{i+1} E_i collapses onto
    E_i by one E1 and a ladder of E3 contractions (and expands by the
    reverse chain);
  * far-apart letters commute, so whole segments can be walked across each
    other with E2 swaps;
  * the rho relations are the mirror images of the lambda relations, so
    their templates are obtained by reflecting positions.

Templates are relative to position 0 and are cached per (degree, relation).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import AlphabetError
from .relations import Step, relation_by_id
from .words import Letter, Word, hooks_to_pairs, letter

__all__ = ["xi_template", "e_certificate"]


def _rev(steps):
    return [Step(s.pos, s.rid, not s.forward) for s in reversed(steps)]


@lru_cache(maxsize=None)
def _e_sides(rid: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    name, _, rest = rid.partition("(")
    args = tuple(int(a) for a in rest.rstrip(")").split(","))
    if name == "E1":
        (i,) = args
        return (i, i), (i,)
    if name == "E2":
        i, j = args
        return (i, j), (j, i)
    if name == "E3":
        i, j = args
        return (i, j, i), (i,)
    raise ValueError(f"not an E relation id: {rid!r}")


class _EBuilder:
    """Mutable E-word together with the steps that produced it."""

    def __init__(self, n: int, idxs):
        self.n = n
        self.word = list(idxs)
        self.steps: list[Step] = []

    def _emit(self, pos, rid, forward, src, dst):
        assert tuple(self.word[pos:pos + len(src)]) == src, \
            f"{rid} does not match at {pos}"
        self.steps.append(Step(pos, rid, forward))
        self.word[pos:pos + len(src)] = dst

    def swap(self, pos):
        i, j = self.word[pos], self.word[pos + 1]
        assert abs(i - j) > 1, f"cannot commute E{i} past E{j}"
        self._emit(pos, f"E2({i},{j})", True, (i, j), (j, i))

    def contract_e1(self, pos):
        i = self.word[pos]
        self._emit(pos, f"E1({i})", True, (i, i), (i,))

    def expand_e1(self, pos):
        i = self.word[pos]
        self._emit(pos, f"E1({i})", False, (i,), (i, i))

    def contract_e3(self, pos):
        i, j = self.word[pos], self.word[pos + 1]
        self._emit(pos, f"E3({i},{j})", True, (i, j, i), (i,))

    def expand_e3(self, pos, j):
        i = self.word[pos]
        self._emit(pos, f"E3({i},{j})", False, (i,), (i, j, i))

    def move_right(self, start, length, count):
        # walk the block [start, start+length) right across `count` letters
        for t in range(count):
            for r in range(length - 1, -1, -1):
                self.swap(start + t + r)

    def wh_contract(self, pos):
        # E_i .. E_{n-1} E_{n-1} .. E_i  ->  E_i
        i = self.word[pos]
        if i == self.n - 1:
            self.contract_e1(pos)
        else:
            self.wh_contract(pos + 1)
            self.contract_e3(pos)

    def wh_expand(self, pos):
        # E_i  ->  E_i .. E_{n-1} E_{n-1} .. E_i
        i = self.word[pos]
        if i == self.n - 1:
            self.expand_e1(pos)
        else:
            self.expand_e3(pos, i + 1)
            self.wh_expand(pos + 1)

    def run(self, steps, offset=0):
        for st in steps:
            lhs, rhs = _e_sides(st.rid)
            src, dst = (lhs, rhs) if st.forward else (rhs, lhs)
            self._emit(st.pos + offset, st.rid, st.forward, src, dst)


def _hat_indices(n: int, letters) -> list[int]:
    out: list[int] = []
    for c in letters:
        if c.alphabet == "L":
            out.extend(range(c.index, n))
        elif c.alphabet == "R":
            out.extend(range(n - 1, c.index - 1, -1))
        else:
            raise AlphabetError(f"no hat image for {c}")
    return out


def _mirror_rid(rid: str) -> str:
    lhs, _ = _e_sides(rid)
    name = rid.partition("(")[0]
    if name == "E2":
        i, j = lhs
        return f"E2({j},{i})"
    return rid


def _mirror(start_idxs, steps):
    """Reflect a template so it acts on reversed words.

    Replays the original steps to know the word length at each point; a
    match of length m at position p reflects to position len - p - m.  E1
    and E3 instances are palindromes, E2 swaps its parameters.
    """
    word = list(start_idxs)
    out = []
    for st in steps:
        lhs, rhs = _e_sides(st.rid)
        src, dst = (lhs, rhs) if st.forward else (rhs, lhs)
        out.append(Step(len(word) - st.pos - len(src), _mirror_rid(st.rid),
                        st.forward))
        assert tuple(word[st.pos:st.pos + len(src)]) == src
        word[st.pos:st.pos + len(src)] = dst
    return out


# -- per-relation template builders (forward: hat(lhs) -> hat(rhs)) -----------

def _tmpl_L1(n, i):
    b = _EBuilder(n, list(range(i, n)) + [n - 1])
    b.contract_e1(n - i - 1)
    return b.steps


def _tmpl_L2(n, i, j):
    # built from hat(L_{j+2} L_i) and reversed at the end
    b = _EBuilder(n, list(range(j + 2, n)) + list(range(i, n)))
    b.move_right(0, n - j - 2, j - i + 1)
    b.expand_e3(j - i, j + 1)
    b.move_right(j - i + 2, 1, n - j - 2)
    assert b.word == list(range(i, n)) + list(range(j, n))
    return _rev(b.steps)


def _tmpl_L3(n, i):
    k = n - 2 * i + 1
    if i == 1:
        b = _EBuilder(n, [n - 1, n - 2, n - 1])
        b.contract_e3(0)
        return b.steps
    seg = 2 * i - 3                      # length of one copy of hat(L_{k+2})
    word = list(range(k, n)) * i + list(range(k - 1, n))
    b = _EBuilder(n, word)
    inner = xi_template(n, f"L2({k},{k})")
    for t in range(i - 1):
        b.run(inner, t * seg)
    b.move_right(0, (i - 1) * seg, 1)
    b.run(xi_template(n, f"L3({i - 1})"), 1)
    b.move_right(0, 1, (i - 1) * seg)
    b.contract_e3((i - 1) * seg)
    for t in range(i - 2, -1, -1):
        b.run(_rev(inner), t * seg)
    assert b.word == list(range(k, n)) * i
    return b.steps


def _tmpl_RL2(n, i, j):
    b = _EBuilder(n, list(range(n - 1, i - 1, -1)) + list(range(j, n)))
    if j == i:
        b.contract_e1(n - i - 1)
        t0 = i
    else:
        t0 = min(i, j)
    for t in range(t0, n - 1):
        b.contract_e3(n - t - 2)
    assert b.word == [n - 1]
    return b.steps


def _tmpl_RL1(n, i, j):
    b = _EBuilder(n, list(range(n - 1, i - 1, -1)) + list(range(j, n)))
    b.move_right(0, n - i, i - 1 - j)
    b.run(xi_template(n, f"RL2({i},{i - 1})"), i - 1 - j)
    b.move_right(0, i - 1 - j, 1)
    b.wh_expand(i - 1 - j)
    return b.steps


def _tmpl_RL3(n, i, j):
    b = _EBuilder(n, list(range(n - 1, i - 1, -1)) + list(range(j, n)))
    b.move_right(n - j + 1, j - i - 1, n - j)
    b.run(xi_template(n, f"RL2({j - 1},{j})"))
    b.wh_expand(1)
    return b.steps


@lru_cache(maxsize=None)
def xi_template(n: int, rid: str) -> tuple[Step, ...]:
    """E-alphabet steps turning hat(lhs) into hat(rhs) for an Omega relation.

    Positions are relative to the start of the hat image of the matched
    side; the surrounding word is never touched.
    """
    rel = relation_by_id(n, rid)      # validates the id and its parameters
    name, _, rest = rid.partition("(")
    args = tuple(int(a) for a in rest.rstrip(")").split(",")) if rest else ()
    if name == "A":
        steps = []
    elif name == "L1":
        steps = _tmpl_L1(n, *args)
    elif name == "L2":
        steps = _tmpl_L2(n, *args)
    elif name == "L3":
        steps = _tmpl_L3(n, *args)
    elif name == "RL1":
        steps = _tmpl_RL1(n, *args)
    elif name == "RL2":
        steps = _tmpl_RL2(n, *args)
    elif name == "RL3":
        steps = _tmpl_RL3(n, *args)
    elif name in ("R1", "R2", "R3"):
        mate = "L" + name[1:] + (f"({','.join(map(str, args))})" if args else "")
        lhs_idxs = _hat_indices(n, relation_by_id(n, mate).lhs)
        steps = _mirror(lhs_idxs, xi_template(n, mate))
    else:
        raise ValueError(f"no hook-alphabet template for relation {rid!r}")
    if __debug__:
        got = _EBuilder(n, _hat_indices(n, rel.lhs))
        got.run(steps)
        assert got.word == _hat_indices(n, rel.rhs), f"broken template {rid}"
    return tuple(steps)


def e_certificate(w: Word) -> tuple[list[Step], tuple[Letter, ...]]:
    """Certificate over E1/E2/E3 carrying `w` to its canonical E-word.

    Phase one expands every hook through its telescope, reaching the hat
    image of the lifted lambda/rho word; phase two replays that word's
    Omega certificate template by template.
    """
    from .rewrite import normal_form

    n = w.n
    b = _EBuilder(n, [c.index for c in w.letters])
    for p in range(len(w.letters) - 1, -1, -1):
        b.wh_expand(p)
    lifted = hooks_to_pairs(w)
    assert b.word == _hat_indices(n, lifted.letters)

    _, deriv = normal_form(lifted)
    lr = list(lifted.letters)
    for st in deriv.steps:
        offset = sum(n - c.index for c in lr[:st.pos])
        tmpl = xi_template(n, st.rid)
        b.run(tmpl if st.forward else _rev(tmpl), offset)
        rel = relation_by_id(n, st.rid)
        src, dst = (rel.lhs, rel.rhs) if st.forward else (rel.rhs, rel.lhs)
        assert tuple(lr[st.pos:st.pos + len(src)]) == src
        lr[st.pos:st.pos + len(src)] = dst

    assert b.word == _hat_indices(n, lr)
    end = tuple(letter("E", i) for i in b.word)
    return b.steps, end
