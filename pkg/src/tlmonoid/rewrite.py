"""Certificate-producing normal forms for words over the TL_n alphabets.

Every word over L u R is equivalent, within the Omega relations, to a
unique balanced word L_{x_1}..L_{x_k} R_{y_k}..R_{y_1} where x and y are the
upper and lower arc tuples of the diagram the word evaluates to.  The
pipeline that finds it is:

  1. one-sided folding: a pure lambda (or rho) word is folded letter by
     letter into tuple form, absorbing letters with large index and
     inserting the rest through chains of L2/R2 moves;
  2. separation: a mixed word is swept left to right, pushing each lambda
     letter through the rho suffix with the RL rules, the residue never
     growing longer;
  3. balancing: the shorter side is padded one letter at a time so the two
     tuples reach equal length, then re-folded.

Each stage emits explicit `Step` records, so the result of `normal_form` is
both the canonical word and a replayable proof of equivalence that
`check_derivation` validates independently.  `normal_form_E` lifts a word
over the hook alphabet, runs the same pipeline, and translates the whole
certificate into E1/E2/E3 steps.

The folds are strictly left-to-right and deterministic: identical input
yields a byte-identical derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlphabetError,
    BadStep,
    DegreeMismatch,
    DegreeTooSmall,
    EndMismatch,
    FamilyViolation,
)
from .relations import (
    Step,
    relation_index,
    step_from_text,
    step_to_text,
)
from .tangles import Tangle
from .tuples import TnTuple, check_tuple
from .words import Letter, Word, evaluate, hooks_to_pairs, letter, word_from_text, word_to_text

__all__ = [
    "Derivation",
    "NormalForm",
    "EqualityResult",
    "reduce_one_sided",
    "push_lambda",
    "separate",
    "normal_form",
    "normal_form_E",
    "equal_words",
    "check_derivation",
    "derivation_to_text",
    "derivation_from_text",
]


@dataclass(frozen=True)
class Derivation:
    """A replayable chain of single-relation rewrite steps."""

    n: int
    family: str
    start: tuple[Letter, ...]
    steps: tuple[Step, ...]
    end: tuple[Letter, ...]
    note: str = ""

    def start_word(self) -> Word:
        return Word(self.n, self.start)

    def end_word(self) -> Word:
        return Word(self.n, self.end)


@dataclass(frozen=True)
class NormalForm:
    """The balanced pair (x, y) and its canonical word L_x R_y."""

    x: TnTuple
    y: TnTuple
    word: Word


@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    nf1: NormalForm
    nf2: NormalForm
    derivation1: Derivation
    derivation2: Derivation
    witness: tuple[Tangle, Tangle] | None = None


def _off(steps, d):
    if d == 0:
        return steps
    return [Step(s.pos + d, s.rid, s.forward) for s in steps]


def _rev(steps):
    return [Step(s.pos, s.rid, not s.forward) for s in reversed(steps)]


# -- one-sided folding over L -------------------------------------------------
# The lambda block occupies positions 0..k-1 of the ambient word and the
# letter being folded sits at position k; emitted steps use those absolute
# positions and never touch the context beyond the letter.

def _absorb_L(n, x, j, out):
    # L_x L_j ~ L_x for j >= n-2k; x is left unchanged
    k = len(x)
    if j == n - 1:
        out.append(Step(k - 1, f"L1({x[-1]})", True))
    elif j == n - 2:
        if x[-1] == n - 1:
            out.append(Step(k - 1, "L3(1)", True))
        else:
            out.append(Step(k - 1, f"L1({x[-1]})", False))
            out.append(Step(k, "L3(1)", True))
            out.append(Step(k - 1, f"L1({x[-1]})", True))
    elif j >= n - 2 * k + 1:
        out.append(Step(k - 1, f"L2({x[-1]},{j})", True))
        _absorb_L(n, x[:-1], j + 2, out)
    else:
        # j == n-2k with k >= 2: grow a full power of L_{n-2k+1} next to the
        # block, collapse the power against L_{n-2k}, then shed the power
        tmpl: list[Step] = []
        _absorb_L(n, x, n - 2 * k + 1, tmpl)
        for _ in range(k):
            out.extend(_rev(tmpl))
        out.append(Step(k, f"L3({k})", True))
        for _ in range(k):
            out.extend(tmpl)


def _insert_L(n, x, j, out):
    # L_x L_j ~ L_y with |y| = k+1, for j <= n-2k-1; returns y
    k = len(x)
    if k == 0 or x[-1] > j:
        return x + [j]
    out.append(Step(k - 1, f"L2({x[-1]},{j})", True))
    y = _insert_L(n, x[:-1], j + 2, out)
    y.append(x[-1])
    return y


def _fold_L(n, x, j, out):
    if x and j >= n - 2 * len(x):
        _absorb_L(n, x, j, out)
        return x
    return _insert_L(n, x, j, out)


# -- one-sided folding over R -------------------------------------------------
# Mirror image: rho words fold right to left; the reduced block is the
# suffix starting at base+1 and the letter being folded sits at `base`.

def _absorb_R(n, x, j, base, out):
    k = len(x)
    if j == n - 1:
        out.append(Step(base, f"R1({x[-1]})", True))
    elif j == n - 2:
        if x[-1] == n - 1:
            out.append(Step(base, "R3(1)", True))
        else:
            out.append(Step(base + 1, f"R1({x[-1]})", False))
            out.append(Step(base, "R3(1)", True))
            out.append(Step(base, f"R1({x[-1]})", True))
    elif j >= n - 2 * k + 1:
        out.append(Step(base, f"R2({x[-1]},{j})", True))
        _absorb_R(n, x[:-1], j + 2, base + 1, out)
    else:
        tmpl: list[Step] = []
        _absorb_R(n, x, n - 2 * k + 1, 0, tmpl)
        for t in range(1, k + 1):
            out.extend(_rev(_off(tmpl, base + t)))
        out.append(Step(base, f"R3({k})", True))
        for t in range(k - 1, -1, -1):
            out.extend(_off(tmpl, base + t))


def _insert_R(n, x, j, base, out):
    k = len(x)
    if k == 0 or x[-1] > j:
        return x + [j]
    out.append(Step(base, f"R2({x[-1]},{j})", True))
    y = _insert_R(n, x[:-1], j + 2, base + 1, out)
    y.append(x[-1])
    return y


def _reduce_R(n, idxs, out, offset=0):
    x: list[int] = []
    for p in range(len(idxs) - 1, -1, -1):
        j = idxs[p]
        base = offset + p
        if x and j >= n - 2 * len(x):
            _absorb_R(n, x, j, base, out)
        else:
            x = _insert_R(n, x, j, base, out)
    return x


# -- pushing a lambda letter through a rho word --------------------------------

def _push(n, p, j):
    """P L_j ~ Lambda P' with only RL steps; returns (lambda, residue, steps).

    Positions are relative to the start of P.  The residue is never longer
    than P, and strictly shorter whenever an RL2 case fires.
    """
    if not p:
        return [j], [], []
    q = p[:-1]
    i = p[-1]
    if abs(i - j) <= 1:
        steps = [Step(len(q), f"RL2({i},{j})", True)]
        lam, resid, s = _push(n, q, n - 1)
        return lam, resid, steps + s
    if j <= i - 2:
        steps = [Step(len(q), f"RL1({i},{j})", True)]
        lam1, q1, s1 = _push(n, q, n - 1)
        lam2, q2, s2 = _push(n, q1, j)
        return lam1 + lam2, q2 + [i - 2], steps + s1 + _off(s2, len(lam1))
    steps = [Step(len(q), f"RL3({i},{j})", True)]
    lam1, q1, s1 = _push(n, q, n - 1)
    lam2, q2, s2 = _push(n, q1, j - 2)
    return lam1 + lam2, q2 + [i], steps + s1 + _off(s2, len(lam1))


# -- padding the shorter side --------------------------------------------------

def _lrlr_lambda(n, x):
    # L_x ~ L_x R_{n-2k+1}: steps inserting the rho letter at position k
    k = len(x)
    if k == 1:
        return [Step(0, f"L1({x[0]})", False), Step(1, "A", True)]
    steps = _lrlr_lambda(n, x[:-1])
    steps.append(Step(k - 1, f"RL1({n - 2 * k + 3},{x[-1]})", True))
    steps.append(Step(k - 2, f"L1({x[-2]})", True))
    return steps


def _lrlr_rho(n, z):
    # R_z ~ L_{n-2l+1} R_z: steps relative to the start of the rho block
    l = len(z)
    if l == 1:
        return [Step(0, f"R1({z[0]})", False), Step(0, "A", False)]
    steps = _off(_lrlr_rho(n, z[:-1]), 1)
    steps.append(Step(0, f"RL3({z[-1]},{n - 2 * l + 3})", True))
    steps.append(Step(0, f"L2({n - 2 * l + 1},{n - 3})", False))
    steps.append(Step(0, f"L1({n - 2 * l + 1})", False))
    steps.append(Step(1, f"RL3({z[-1]},{n - 1})", False))
    steps.append(Step(2, "A", True))
    steps.append(Step(2, f"R1({z[-2]})", True))
    return steps


# -- the pipeline ----------------------------------------------------------------

def _check_degree(n):
    if n < 3:
        raise DegreeTooSmall(f"rewriting needs degree >= 3, got {n}")


def _refold_R(n, idxs, out, offset):
    z = _reduce_R(n, idxs, out, offset)
    return z[::-1]          # the reduced word's letters, in ascending order


def _separate_fold(n, letters, out):
    """Sweep the word; keep the lambda tuple and the reduced rho suffix."""
    x: list[int] = []
    v: list[int] = []
    for c in letters:
        if c.alphabet == "R":
            v = _refold_R(n, v + [c.index], out, len(x))
        else:
            lam, resid, ps = _push(n, v, c.index)
            out.extend(_off(ps, len(x)))
            for i in lam:
                x = _fold_L(n, x, i, out)
            if resid == v[:len(resid)]:
                v = resid   # untouched prefix of a reduced word stays reduced
            else:
                v = _refold_R(n, resid, out, len(x))
    return x, v


def _balance(n, x, v, out):
    k, l = len(x), len(v)
    if k > l:
        for _ in range(k - l):
            out.extend(_lrlr_lambda(n, x))
            v = _refold_R(n, [n - 2 * k + 1] + v, out, k)
    elif l > k:
        z = v[::-1]
        for _ in range(l - k):
            out.extend(_off(_lrlr_rho(n, z), len(x)))
            x = _fold_L(n, x, n - 2 * l + 1, out)
    assert len(x) == len(v), "padding failed to balance the tuples"
    return x, v


def _nf_letters(n, x, v):
    return tuple(letter("L", i) for i in x) + tuple(letter("R", i) for i in v)


def _only(letters, allowed, what):
    for l in letters:
        if l.alphabet not in allowed:
            raise AlphabetError(f"{what} got a {l.alphabet} letter ({l})")


def reduce_one_sided(w: Word) -> tuple[TnTuple, Derivation]:
    """Fold a pure lambda word (or pure rho word) into tuple form.

    Returns the tuple x with L_x (resp. R_x) equivalent to the input, and a
    derivation using only the one-sided relations.
    """
    _check_degree(w.n)
    alphabets = w.alphabets()
    if not alphabets <= {"L"} and not alphabets <= {"R"}:
        raise AlphabetError("reduce_one_sided needs a pure L word or pure R word")
    steps: list[Step] = []
    if alphabets <= {"L"}:
        x: list[int] = []
        for c in w.letters:
            x = _fold_L(w.n, x, c.index, steps)
        end = tuple(letter("L", i) for i in x)
        tup = check_tuple(w.n, x)
    else:
        z = _reduce_R(w.n, [c.index for c in w.letters], steps)
        end = tuple(letter("R", i) for i in reversed(z))
        tup = check_tuple(w.n, z)
    return tup, Derivation(w.n, "Omega", w.letters, tuple(steps), end)


def push_lambda(p: Word, j: int) -> tuple[Word, Word, Derivation]:
    """Cross L_j leftwards through the pure rho word `p`.

    Returns words u (pure lambda) and p' (pure rho, never longer than p)
    with p L_j ~ u p', plus the RL-only derivation.
    """
    _check_degree(p.n)
    _only(p.letters, {"R"}, "push_lambda")
    if not 1 <= j <= p.n - 1:
        raise IndexError(f"letter index {j} outside [1, {p.n - 1}]")
    lam, resid, steps = _push(p.n, [c.index for c in p.letters], j)
    start = p.letters + (letter("L", j),)
    u = tuple(letter("L", i) for i in lam)
    v = tuple(letter("R", i) for i in resid)
    return (Word(p.n, u), Word(p.n, v),
            Derivation(p.n, "Omega", start, tuple(steps), u + v))


def separate(w: Word) -> tuple[Word, Word, Derivation]:
    """Split a mixed lambda/rho word as w ~ u v with u over L and v over R.

    Both parts are kept folded while sweeping, which bounds the rho suffix
    by n // 2 letters and so keeps the push recursion shallow.
    """
    _check_degree(w.n)
    _only(w.letters, {"L", "R"}, "separate")
    steps: list[Step] = []
    x, v = _separate_fold(w.n, w.letters, steps)
    u_letters = tuple(letter("L", i) for i in x)
    v_letters = tuple(letter("R", i) for i in v)
    return (Word(w.n, u_letters), Word(w.n, v_letters),
            Derivation(w.n, "Omega", w.letters, tuple(steps),
                       u_letters + v_letters))


def normal_form(w: Word) -> tuple[NormalForm, Derivation]:
    """The canonical balanced word equivalent to `w`, with its certificate.

    Hook letters are first expanded as E_i -> L_i R_i; the derivation then
    starts from the expanded word and the expansion is recorded in its note.
    """
    _check_degree(w.n)
    letters = w.letters
    note = ""
    if any(c.alphabet == "E" for c in letters):
        letters = hooks_to_pairs(w).letters
        note = "hook letters were expanded as E_i -> L_i R_i"
    steps: list[Step] = []
    x, v = _separate_fold(w.n, letters, steps)
    x, v = _balance(w.n, x, v, steps)
    end = _nf_letters(w.n, x, v)
    nf = NormalForm(check_tuple(w.n, x), check_tuple(w.n, v[::-1]),
                    Word(w.n, end))
    return nf, Derivation(w.n, "Omega", letters, tuple(steps), end, note)


def normal_form_E(w: Word) -> tuple[NormalForm, Word, Derivation]:
    """Normal form of a pure E-word, with a certificate over E1/E2/E3 only.

    The canonical E-word is the hat image of the balanced word L_x R_y (not
    a shortest representative).  The certificate first expands each hook
    through its lambda-rho telescope, then replays the Omega certificate of
    the lifted word through the per-relation step templates.
    """
    from .etranslate import e_certificate

    _check_degree(w.n)
    _only(w.letters, {"E"}, "normal_form_E")
    nf, _ = normal_form(w)
    steps, end = e_certificate(w)
    return nf, Word(w.n, end), Derivation(w.n, "Xi", w.letters,
                                          tuple(steps), end)


def equal_words(w1: Word, w2: Word) -> EqualityResult:
    """Decide w1 ~ w2 by comparing normal forms.

    On success the two derivations form a joint certificate meeting at the
    canonical word; on failure the evaluated diagrams witness inequality.
    """
    if w1.n != w2.n:
        raise DegreeMismatch(f"degrees {w1.n} and {w2.n} differ")

    def nf_of(w):
        if w.letters and w.alphabets() <= {"E"}:
            nf, _, d = normal_form_E(w)
            return nf, d
        return normal_form(w)

    nf1, d1 = nf_of(w1)
    nf2, d2 = nf_of(w2)
    eq = nf1.x == nf2.x and nf1.y == nf2.y
    witness = None
    if not eq:
        witness = (evaluate(w1)[0], evaluate(w2)[0])
    return EqualityResult(eq, nf1, nf2, d1, d2, witness)


def check_derivation(d: Derivation, relation_family: str | None = None) -> Word:
    """Replay a derivation step by step and validate everything about it.

    Every step must name a relation of the declared family and match the
    word verbatim at its position; the replay must arrive at the recorded
    end word; and, independently, start and end must evaluate to the same
    diagram.  Returns the end word.
    """
    family = relation_family or d.family
    if family not in ("Omega", "Xi"):
        raise FamilyViolation(f"unknown relation family {family!r}")
    index = relation_index(d.n, family)
    word = list(d.start)
    for i, st in enumerate(d.steps):
        rel = index.get(st.rid)
        if rel is None:
            raise FamilyViolation(
                f"step {i} uses {st.rid}, not a {family} relation at n={d.n}")
        src, dst = (rel.lhs, rel.rhs) if st.forward else (rel.rhs, rel.lhs)
        p = st.pos
        if p < 0 or tuple(word[p:p + len(src)]) != src:
            found = " ".join(map(str, word[p:p + len(src)])) or "1"
            raise BadStep(i, f"{st.rid} expected "
                             f"{' '.join(map(str, src))} at {p}, found {found}")
        word[p:p + len(src)] = dst
    if tuple(word) != d.end:
        raise EndMismatch("replay did not reach the recorded end word")
    if evaluate(Word(d.n, d.start))[0] != evaluate(Word(d.n, d.end))[0]:
        raise EndMismatch("start and end words evaluate to different diagrams")
    return Word(d.n, d.end)


# -- derivation file format ------------------------------------------------------
# header `n=<int>; family=<Omega|Xi>`, one step per line, then `end=<word>`.
# The start word travels alongside the file (it names the claim being
# certified), so the loader takes it as an argument.

def derivation_to_text(d: Derivation) -> str:
    lines = [f"n={d.n}; family={d.family}"]
    lines.extend(step_to_text(s) for s in d.steps)
    lines.append(f"end={word_to_text(d.end_word())}")
    return "\n".join(lines) + "\n"


def derivation_from_text(text: str, start: Word) -> Derivation:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty derivation text")
    head = lines[0]
    import re

    m = re.match(r"^n=(\d+);\s*family=(\w+)$", head)
    if not m:
        raise ValueError(f"bad derivation header {head!r}")
    n, family = int(m.group(1)), m.group(2)
    if start.n != n:
        raise DegreeMismatch(f"start word degree {start.n} != header {n}")
    if not lines[-1].startswith("end="):
        raise ValueError("derivation text is missing its end line")
    end = word_from_text(n, lines[-1][4:])
    steps = tuple(step_from_text(ln) for ln in lines[1:-1])
    return Derivation(n, family, start.letters, steps, end.letters)
