"""Machine checks of the presentation properties at desk scale.

This module is the enumeration oracle for TL_n (non-crossing perfect
matchings, counted by the Catalan numbers) together with exhaustive
presentation checks and a seeded rewriting fuzzer.  All randomness comes
from a named seed recorded in the report, and report rendering avoids
set iteration order, so outputs can be diffed byte by byte; elapsed times
are collected but only printed on request.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DegreeError, DegreeOutOfRange, DegreeTooLarge, TLError
from .relations import apply_step, relation_set, Step
from .tangles import Tangle, boundary_tuples, build_tangle, factorize
from .tuples import enumerate_tuples
from .words import Word, evaluate, hat, letter, tuple_words
from .rewrite import check_derivation, equal_words, normal_form, normal_form_E

__all__ = [
    "catalan",
    "enumerate_TL",
    "verify_presentation",
    "fuzz_words",
    "PresentationReport",
    "FuzzReport",
    "CheckResult",
    "LaneStats",
]

_MAX_ENUM_DEGREE = 12


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _segment_matchings(points: tuple[int, ...]):
    """Non-crossing matchings of consecutive boundary positions.

    The first position pairs with a position at odd offset, splitting the
    rest into an enclosed segment and a tail; recursing on both is the
    classical Catalan recursion and fixes a deterministic order.
    """
    if not points:
        return ((),)
    first = points[0]
    out = []
    for t in range(1, len(points), 2):
        pair = (first, points[t])
        for inner in _segment_matchings(points[1:t]):
            for outer in _segment_matchings(points[t + 1:]):
                out.append((pair,) + inner + outer)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_TL(n: int) -> tuple[Tangle, ...]:
    """All tangles of degree n, deterministically ordered.

    Guarded to n <= 12 (208012 diagrams); raises DegreeTooLarge beyond.
    """
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"degree must be a positive integer, got {n!r}")
    if n > _MAX_ENUM_DEGREE:
        raise DegreeTooLarge(f"enumeration capped at degree {_MAX_ENUM_DEGREE}")
    two_n1 = 2 * n + 1

    def point(p: int) -> int:
        return p if p <= n else -(two_n1 - p)

    out = []
    for matching in _segment_matchings(tuple(range(1, 2 * n + 1))):
        # pairs come out with positions ordered inside each block, so sorting
        # by the first position is exactly the canonical block order
        blocks = tuple((point(p), point(q)) for p, q in sorted(matching))
        out.append(Tangle(n, blocks))
    assert len(out) == catalan(n)
    return tuple(out)


# -- presentation checks ---------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    count: int
    detail: str = ""


@dataclass(frozen=True)
class PresentationReport:
    n: int
    checks: tuple[CheckResult, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self, timings: bool = False) -> str:
        lines = [f"verify n={self.n}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            extra = f" ({c.detail})" if c.detail else ""
            lines.append(f"  {c.name}: {status} [{c.count}]{extra}")
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        if timings:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)

    def to_doc(self, timings: bool = False) -> dict:
        doc = {
            "n": self.n,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed,
                 "count": c.count, "detail": c.detail}
                for c in self.checks
            ],
        }
        if timings:
            doc["elapsed"] = self.elapsed
        return doc


def verify_presentation(n: int) -> PresentationReport:
    """Exhaustively check both presentations against the diagram monoid.

    (a) every Omega and Xi relation instance evaluates to equal diagrams;
    (b) the balanced canonical words hit every diagram exactly once;
    (c) every diagram is reached by a word over the hook alphabet;
    (d) factorize / build round-trips on every diagram.
    """
    if not 3 <= n <= 10:
        raise DegreeOutOfRange(f"verify_presentation covers 3 <= n <= 10")
    t0 = time.perf_counter()
    checks = []

    rels = relation_set(n, "Omega") + relation_set(n, "Xi")
    bad = [r.rid for r in rels
           if evaluate(Word(n, r.lhs))[0] != evaluate(Word(n, r.rhs))[0]]
    checks.append(CheckResult(
        "relations evaluate to equal diagrams", not bad, len(rels),
        "" if not bad else "failing: " + " ".join(sorted(bad))))

    tangles = enumerate_TL(n)
    seen: dict[Tangle, tuple] = {}
    duplicates = 0
    for k in range(n // 2 + 1):
        tups = enumerate_tuples(n, k)
        for x in tups:
            for y in tups:
                lam, rho = tuple_words(x), tuple_words(y)[1]
                t, _ = evaluate(lam[0].concat(rho))
                if t in seen:
                    duplicates += 1
                seen[t] = (x.entries, y.entries)
    surjective = len(seen) == len(tangles) == catalan(n)
    checks.append(CheckResult(
        "canonical words biject onto the diagrams",
        duplicates == 0 and surjective, len(seen),
        f"catalan={catalan(n)}"))

    missed_e = 0
    for t in tangles:
        x, y = factorize(t)
        lam, _ = tuple_words(x)
        _, rho = tuple_words(y)
        ew = hat(lam.concat(rho))
        if evaluate(ew)[0] != t:
            missed_e += 1
    checks.append(CheckResult(
        "every diagram is an E-word image", missed_e == 0, len(tangles)))

    bad_rt = sum(1 for t in tangles if build_tangle(*factorize(t)) != t)
    checks.append(CheckResult(
        "factorize/build round-trip", bad_rt == 0, len(tangles)))

    return PresentationReport(n, tuple(checks), time.perf_counter() - t0)


# -- seeded fuzzing ---------------------------------------------------------------

@dataclass(frozen=True)
class LaneStats:
    alphabet: str
    words: int
    nf_mismatches: int
    cert_failures: int

    @property
    def passed(self) -> bool:
        return self.nf_mismatches == 0 and self.cert_failures == 0


@dataclass(frozen=True)
class FuzzReport:
    n: int
    seed: int
    count: int
    max_len: int
    lanes: tuple[LaneStats, ...]
    triples: int
    triple_failures: int
    elapsed: float

    @property
    def passed(self) -> bool:
        return (all(l.passed for l in self.lanes)
                and self.triple_failures == 0)

    def to_text(self, timings: bool = False) -> str:
        lines = [f"fuzz n={self.n} seed={self.seed} count={self.count}"
                 f" max_len={self.max_len}"]
        for l in self.lanes:
            lines.append(
                f"  lane {l.alphabet}: words={l.words}"
                f" nf_mismatches={l.nf_mismatches}"
                f" cert_failures={l.cert_failures}")
        lines.append(f"  equality triples: {self.triples}"
                     f" failures={self.triple_failures}")
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        if timings:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(lines)

    def to_doc(self, timings: bool = False) -> dict:
        doc = {
            "n": self.n, "seed": self.seed, "count": self.count,
            "max_len": self.max_len, "passed": self.passed,
            "lanes": [
                {"alphabet": l.alphabet, "words": l.words,
                 "nf_mismatches": l.nf_mismatches,
                 "cert_failures": l.cert_failures}
                for l in self.lanes
            ],
            "triples": self.triples,
            "triple_failures": self.triple_failures,
        }
        if timings:
            doc["elapsed"] = self.elapsed
        return doc


def _random_word(rng, n, alphabet, max_len) -> Word:
    length = rng.randint(0, max_len)
    return Word(n, tuple(letter(rng.choice(alphabet), rng.randint(1, n - 1))
                         for _ in range(length)))


def _mutate(rng, w: Word, rounds: int = 3) -> Word:
    """Apply a few random relation steps; the result stays equivalent."""
    from .relations import relation_index

    idx = relation_index(w.n, "Omega")
    rids = sorted(idx)
    for _ in range(rounds):
        for _attempt in range(8):
            rid = rids[rng.randrange(len(rids))]
            rel = idx[rid]
            forward = rng.random() < 0.5
            src = rel.lhs if forward else rel.rhs
            spots = [p for p in range(len(w.letters) - len(src) + 1)
                     if w.letters[p:p + len(src)] == src]
            if spots:
                w = apply_step(w, Step(rng.choice(spots), rid, forward))
                break
    return w


def fuzz_words(n: int, count: int, max_len: int = 50,
               seed: int = 0) -> FuzzReport:
    """Seeded random soundness check of the rewriting pipeline.

    Three lanes: words over L u R and words over E go through
    `normal_form` (E letters lifted through hook expansion) at full count;
    a smaller lane drives `normal_form_E`, whose certificates expand each
    relation application into its E-alphabet template and are far longer.
    Every produced certificate is replayed by `check_derivation`, and every
    normal form is compared against direct diagram evaluation.  Also spot
    checks that word equality is an equivalence relation agreeing with
    diagram equality on mutated triples.
    """
    if n < 3:
        raise DegreeOutOfRange("fuzzing needs n >= 3")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    lanes = []

    for alphabet in ("LR", "E"):
        nf_bad = cert_bad = 0
        for _ in range(count):
            w = _random_word(rng, n, alphabet, max_len)
            t, _ = evaluate(w)
            bl, br = boundary_tuples(t)
            nf, d = normal_form(w)
            if nf.x != bl or nf.y != br:
                nf_bad += 1
            try:
                check_derivation(d)
            except TLError:
                cert_bad += 1
        lanes.append(LaneStats(alphabet, count, nf_bad, cert_bad))

    xi_count = min(count, 150)
    xi_len = min(max_len, 12)
    nf_bad = cert_bad = 0
    for _ in range(xi_count):
        w = _random_word(rng, n, "E", xi_len)
        t, _ = evaluate(w)
        bl, br = boundary_tuples(t)
        nf, canonical, d = normal_form_E(w)
        if nf.x != bl or nf.y != br or evaluate(canonical)[0] != t:
            nf_bad += 1
        try:
            check_derivation(d)
        except TLError:
            cert_bad += 1
    lanes.append(LaneStats("E/xi", xi_count, nf_bad, cert_bad))

    triples = min(25, count)
    triple_bad = 0
    for _ in range(triples):
        u = _random_word(rng, n, "LR", min(max_len, 15))
        v = _mutate(rng, u)
        w2 = _random_word(rng, n, "LR", min(max_len, 15))
        uu = equal_words(u, u)
        uv = equal_words(u, v)
        vu = equal_words(v, u)
        uw = equal_words(u, w2)
        vw = equal_words(v, w2)
        ok = uu.equal and uv.equal and vu.equal == uv.equal
        ok = ok and uw.equal == vw.equal        # transitivity both ways
        ok = ok and uw.equal == (evaluate(u)[0] == evaluate(w2)[0])
        if not ok:
            triple_bad += 1
    return FuzzReport(n, seed, count, max_len, tuple(lanes),
                      triples, triple_bad, time.perf_counter() - t0)
