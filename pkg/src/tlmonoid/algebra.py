"""The twisted semigroup algebra TL_n(k, delta) over exact rationals.

Elements are finite linear combinations of tangles.  The product of two
basis diagrams is their diagram product rescaled by delta raised to the
number of interior loops the stacking closed, extended bilinearly.  All
arithmetic is exact: coefficients live in an exact field with decidable
equality (arbitrary-precision rationals by default; anything supporting
+, *, ** and == against Fraction works).  delta is threaded through the
product rather than stored on elements, and is recorded when serializing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AlphabetError, DegreeMismatch, DegreeTooSmall, ZeroDelta
from .relations import twist_relations
from .tangles import Tangle, compose, identity, tangle_from_text, tangle_to_text
from .words import Word, evaluate

__all__ = [
    "AlgebraElement",
    "zero",
    "one",
    "add",
    "scale",
    "alg_mul",
    "alg_eval_word",
    "verify_xi_prime",
    "XiPrimeReport",
    "element_to_text",
    "element_from_text",
]


class AlgebraElement:
    """An exact linear combination of degree-n tangles.

    Zero coefficients are never stored; equality is coefficientwise.  Treat
    instances as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean: dict[Tangle, Fraction] = {}
        if terms:
            for t, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    c = clean.get(t, Fraction(0)) + c
                    if c:
                        clean[t] = c
                    else:
                        del clean[t]
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        k = len(self.terms)
        return f"<AlgebraElement n={self.n} with {k} term{'s'[:k != 1]}>"

    def is_zero(self) -> bool:
        return not self.terms

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].blocks)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __rmul__(self, c):
        return scale(c, self)


def zero(n: int) -> AlgebraElement:
    return AlgebraElement(n)


def one(n: int) -> AlgebraElement:
    """The identity tangle with coefficient 1."""
    return AlgebraElement(n, {identity(n): Fraction(1)})


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise DegreeMismatch(f"degrees {a.n} and {b.n} differ")
    terms = dict(a.terms)
    for t, c in b.terms.items():
        s = terms.get(t, Fraction(0)) + c
        if s:
            terms[t] = s
        else:
            terms.pop(t, None)
    out = AlgebraElement(a.n)
    out.terms = terms
    return out


def scale(c, a: AlgebraElement) -> AlgebraElement:
    c = Fraction(c)
    out = AlgebraElement(a.n)
    if c:
        out.terms = {t: c * v for t, v in a.terms.items()}
    return out


def alg_mul(a: AlgebraElement, b: AlgebraElement, delta) -> AlgebraElement:
    """Bilinear product; basis diagrams multiply with weight delta^loops."""
    if a.n != b.n:
        raise DegreeMismatch(f"degrees {a.n} and {b.n} differ")
    delta = Fraction(delta)
    terms: dict[Tangle, Fraction] = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            t, m = compose(ta, tb)
            c = ca * cb * delta ** m
            if c:
                s = terms.get(t, Fraction(0)) + c
                if s:
                    terms[t] = s
                else:
                    del terms[t]
            elif t in terms and not terms[t]:
                del terms[t]
    out = AlgebraElement(a.n)
    out.terms = {t: c for t, c in terms.items() if c}
    return out


def alg_eval_word(w: Word, delta) -> AlgebraElement:
    """Image of a hook-alphabet word: delta^{loops} times its diagram."""
    if w.letters and not w.alphabets() <= {"E"}:
        raise AlphabetError("alg_eval_word takes a pure E word")
    delta = Fraction(delta)
    t, m = evaluate(w)
    return AlgebraElement(w.n, {t: delta ** m})


# -- checking the loop-weighted relation family --------------------------------

from dataclasses import dataclass


@dataclass(frozen=True)
class RelationCheck:
    rid: str
    passed: bool


@dataclass(frozen=True)
class XiPrimeReport:
    n: int
    delta: Fraction
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"xi-prime n={self.n} delta={self.delta}"]
        lines += [f"  {c.rid}: {'pass' if c.passed else 'FAIL'}"
                  for c in self.checks]
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}"
                     f" ({len(self.checks)} relations)")
        return "\n".join(lines)


def _word_element(n, letters, delta) -> AlgebraElement:
    # multiply out letter by letter, exercising the star product itself
    out = one(n)
    for l in letters:
        out = alg_mul(out, alg_eval_word(Word(n, (l,)), delta), delta)
    return out


def verify_xi_prime(n: int, delta) -> XiPrimeReport:
    """Check every loop-weighted relation inside the algebra.

    For a relation delta^{m(v)} u = delta^{m(u)} v, both sides are expanded
    through the star product and compared exactly.  Requires delta != 0.
    """
    if n < 3:
        raise DegreeTooSmall(f"need n >= 3, got {n}")
    delta = Fraction(delta)
    if delta == 0:
        raise ZeroDelta("the presentation is only claimed for delta != 0")
    checks = []
    for rel in twist_relations(n, delta):
        lhs = scale(rel.lhs_coeff, _word_element(n, rel.lhs, delta))
        rhs = scale(rel.rhs_coeff, _word_element(n, rel.rhs, delta))
        checks.append(RelationCheck(rel.rid, lhs == rhs))
    return XiPrimeReport(n, delta, tuple(checks))


# -- element text format ---------------------------------------------------------
# `delta=<rational>; n=<int>;` then one `<rational> * <tangle>` line per term,
# sorted canonically.  delta is recorded for safety even though elements do
# not carry it.

def element_to_text(a: AlgebraElement, delta) -> str:
    lines = [f"delta={Fraction(delta)}; n={a.n};"]
    for t, c in a.items_sorted():
        lines.append(f"{c} * {tangle_to_text(t)}")
    return "\n".join(lines) + "\n"


def element_from_text(text: str) -> tuple[AlgebraElement, Fraction]:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty element text")
    import re

    m = re.match(r"^delta=([^;]+);\s*n=(\d+);$", lines[0])
    if not m:
        raise ValueError(f"bad element header {lines[0]!r}")
    delta = Fraction(m.group(1))
    n = int(m.group(2))
    terms = []
    for ln in lines[1:]:
        coeff, sep, tng = ln.partition(" * ")
        if not sep:
            raise ValueError(f"bad element line {ln!r}")
        terms.append((tangle_from_text(tng), Fraction(coeff)))
    return AlgebraElement(n, terms), delta
