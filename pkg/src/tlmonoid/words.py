"""Letters and words over the three generating alphabets of TL_n.

The alphabets are L = {L1..L(n-1)}, R = {R1..R(n-1)} and E = {E1..E(n-1)};
a word carries its degree explicitly and the empty word is the monoid
identity, printed `1`.  Evaluation sends a letter to its generator diagram
and multiplies left to right, accumulating the number of interior loops
closed along the way; by the cocycle identity for loop counts the total does
not depend on bracketing.  The hat substitution

    L_i -> E_i E_{i+1} ... E_{n-1},     R_i -> E_{n-1} ... E_{i+1} E_i

rewrites lambda/rho words over the hook alphabet without changing their
evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetError
from .tangles import Tangle, compose, generator, identity
from .tuples import TnTuple

__all__ = [
    "Letter",
    "Word",
    "letter",
    "L",
    "R",
    "E",
    "word_from_text",
    "word_to_text",
    "evaluate",
    "hat",
    "hooks_to_pairs",
    "tuple_words",
]

_ALPHABET_KIND = {"L": "lambda", "R": "rho", "E": "e"}


@dataclass(frozen=True, slots=True)
class Letter:
    alphabet: str
    index: int

    def __str__(self) -> str:
        return f"{self.alphabet}{self.index}"


_CACHE: dict[tuple[str, int], Letter] = {}


def letter(alphabet: str, index: int) -> Letter:
    """Interned letter; identical (alphabet, index) yields the same object."""
    key = (alphabet, index)
    got = _CACHE.get(key)
    if got is None:
        if alphabet not in _ALPHABET_KIND:
            raise AlphabetError(f"unknown alphabet {alphabet!r}")
        if index < 1:
            raise ValueError(f"letter index must be >= 1, got {index}")
        got = _CACHE[key] = Letter(alphabet, index)
    return got


def L(i: int) -> Letter:
    return letter("L", i)


def R(i: int) -> Letter:
    return letter("R", i)


def E(i: int) -> Letter:
    return letter("E", i)


@dataclass(frozen=True)
class Word:
    """A word over L u R u E with explicit degree n."""

    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        for l in self.letters:
            if not 1 <= l.index <= self.n - 1:
                raise ValueError(
                    f"letter {l} has index outside [1, {self.n - 1}]")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return word_to_text(self)

    def alphabets(self) -> frozenset[str]:
        return frozenset(l.alphabet for l in self.letters)

    def concat(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError("cannot concatenate words of different degree")
        return Word(self.n, self.letters + other.letters)


def word_to_text(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(str(l) for l in w.letters)


def word_from_text(n: int, text: str) -> Word:
    """Parse whitespace-separated tokens `L<i>` / `R<i>` / `E<i>`.

    Input is case-insensitive; `1` (or nothing) denotes the empty word.
    """
    toks = text.split()
    if toks == ["1"] or not toks:
        return Word(n, ())
    letters = []
    for tok in toks:
        head = tok[:1].upper()
        if head not in _ALPHABET_KIND or not tok[1:].isdigit():
            raise ValueError(f"bad word token {tok!r}")
        letters.append(letter(head, int(tok[1:])))
    return Word(n, tuple(letters))


def evaluate(w: Word) -> tuple[Tangle, int]:
    """Product of the generator diagrams of `w` and the total loop count."""
    t = identity(w.n)
    m = 0
    for l in w.letters:
        t, k = compose(t, generator(w.n, _ALPHABET_KIND[l.alphabet], l.index))
        m += k
    return t, m


def _hat_letter(n: int, l: Letter) -> tuple[Letter, ...]:
    if l.alphabet == "L":
        return tuple(letter("E", i) for i in range(l.index, n))
    if l.alphabet == "R":
        return tuple(letter("E", i) for i in range(n - 1, l.index - 1, -1))
    raise AlphabetError(f"hat substitution is undefined on {l}")


def hat(w: Word) -> Word:
    """Letterwise hat substitution of a lambda/rho word into an E-word.

    A monoid morphism that preserves evaluation; raises AlphabetError if the
    word already contains E letters.
    """
    out: list[Letter] = []
    for l in w.letters:
        out.extend(_hat_letter(w.n, l))
    return Word(w.n, tuple(out))


def hooks_to_pairs(w: Word) -> Word:
    """Replace every hook letter E_i by the pair L_i R_i.

    Evaluation is unchanged; lambda/rho letters pass through untouched.
    """
    out: list[Letter] = []
    for l in w.letters:
        if l.alphabet == "E":
            out.append(letter("L", l.index))
            out.append(letter("R", l.index))
        else:
            out.append(l)
    return Word(w.n, tuple(out))


def tuple_words(x: TnTuple) -> tuple[Word, Word]:
    """The words L_{x_1}..L_{x_k} and R_{x_k}..R_{x_1} for a tuple x.

    The empty tuple maps to two empty words.
    """
    lam = Word(x.n, tuple(letter("L", i) for i in x.entries))
    rho = Word(x.n, tuple(letter("R", i) for i in reversed(x.entries)))
    return lam, rho
